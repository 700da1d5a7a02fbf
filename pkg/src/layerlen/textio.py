"""Text formats for algebras and modules.

Algebra files::

    field p=2
    vertices 1 2 3
    arrows a:1->2 b:2->3
    relations b*a

Relation expressions are sums of terms ``[coeff*]arrow*...*arrow`` written
in function order (``b*a`` traverses a first).  Blank lines and ``#``
comments are skipped; several ``relations`` lines may appear.

Module files::

    dims 1=0 2=1 3=1
    arrow a = []
    arrow b = [[1]]

Matrices are row-major with rows = dim(target); ``[]`` stands for any
matrix with a zero side.  Both formats round-trip through their printers.
"""

from __future__ import annotations

import hashlib
import json
import re

import numpy as np

from . import linalg, reps
from .algebra import Algebra, Quiver, build_algebra
from .errors import ContractViolation, MalformedRelation, ParseError

_LABEL = re.compile(r"^[A-Za-z0-9_]+$")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_relation_expr(expr: str, p: int, lineno: int):
    """One relation expression -> list of (coeff, labels in traversal order)."""
    terms = []
    sign = 1
    token = ""
    chunks = []
    for ch in expr:
        if ch in "+-":
            chunks.append((sign, token))
            token = ""
            sign = 1 if ch == "+" else -1
        else:
            token += ch
    chunks.append((sign, token))
    for sgn, chunk in chunks:
        if not chunk:
            raise ParseError(f"empty relation term in {expr!r}", lineno)
        parts = chunk.split("*")
        coeff = 1
        if parts and parts[0].isdigit():
            coeff = int(parts[0])
            parts = parts[1:]
        if not parts or any(not _LABEL.match(x) for x in parts):
            raise ParseError(f"bad relation term {chunk!r}", lineno)
        # written in function order; traversal order is reversed
        terms.append(((sgn * coeff) % p, tuple(reversed(parts))))
    return terms


def parse_algebra_source(text: str):
    """(p, vertex labels, arrow triples, relation term lists)."""
    p = None
    vertices: list[str] | None = None
    arrows: list[tuple[str, str, str]] = []
    relation_exprs: list[tuple[int, str]] = []
    for lineno, line in _lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            m = re.fullmatch(r"p\s*=\s*(\d+)", rest)
            if not m:
                raise ParseError("field line must read 'field p=<prime>'", lineno)
            p = int(m.group(1))
        elif head == "vertices":
            vertices = rest.split()
            if not vertices:
                raise ParseError("vertices line lists no vertices", lineno)
        elif head == "arrows":
            for tok in rest.split():
                m = re.fullmatch(r"([A-Za-z0-9_]+):([A-Za-z0-9_]+)->([A-Za-z0-9_]+)", tok)
                if not m:
                    raise ParseError(f"bad arrow {tok!r}", lineno)
                arrows.append((m.group(1), m.group(2), m.group(3)))
        elif head == "relations":
            for tok in rest.split():
                relation_exprs.append((lineno, tok))
        else:
            raise ParseError(f"unknown section {head!r}", lineno)
    if p is None:
        raise ParseError("missing 'field' line")
    if vertices is None:
        raise ParseError("missing 'vertices' line")
    relations = [
        _parse_relation_expr(expr, p, lineno) for lineno, expr in relation_exprs
    ]
    return p, vertices, arrows, relations


def parse_algebra(text: str, length_cap: int = 12, name: str | None = None) -> Algebra:
    p, vertices, arrows, relations = parse_algebra_source(text)
    try:
        quiver = Quiver(vertices, arrows)
        A = build_algebra(quiver, relations, p, length_cap)
    except MalformedRelation:
        raise
    except ContractViolation as exc:
        raise ParseError(str(exc)) from exc
    A.name = name or default_algebra_name(A)
    return A


def default_algebra_name(A: Algebra) -> str:
    payload = print_algebra(A).encode()
    return "alg-" + hashlib.sha256(payload).hexdigest()[:8]


def print_algebra(A: Algebra) -> str:
    q = A.quiver
    lines = [f"field p={A.p}", "vertices " + " ".join(q.vertices)]
    arrows = " ".join(
        f"{a.label}:{q.vertices[a.source]}->{q.vertices[a.target]}" for a in q.arrows
    )
    lines.append("arrows" + (" " + arrows if arrows else ""))
    rels = " ".join(r.text(q) for r in A.relations)
    lines.append("relations" + (" " + rels if rels else ""))
    return "\n".join(lines) + "\n"


def parse_module(text: str, A: Algebra) -> reps.Rep:
    dims: dict[int, int] | None = None
    mats: dict[int, np.ndarray] = {}
    for lineno, line in _lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "dims":
            dims = {}
            for tok in rest.split():
                m = re.fullmatch(r"([A-Za-z0-9_]+)=(\d+)", tok)
                if not m or m.group(1) not in A.quiver.vertex_index:
                    raise ParseError(f"bad dims entry {tok!r}", lineno)
                dims[A.quiver.vertex_index[m.group(1)]] = int(m.group(2))
        elif head == "arrow":
            label, _, literal = rest.partition("=")
            label = label.strip()
            if label not in A.quiver.arrow_index:
                raise ParseError(f"unknown arrow {label!r}", lineno)
            ai = A.quiver.arrow_index[label]
            if ai in mats:
                raise ParseError(f"duplicate arrow {label!r}", lineno)
            try:
                data = json.loads(literal.strip())
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad matrix literal for {label!r}: {exc}", lineno)
            mats[ai] = data
        else:
            raise ParseError(f"unknown module section {head!r}", lineno)
    if dims is None:
        raise ParseError("missing 'dims' line")
    dim_vec = [dims.get(v, 0) for v in range(A.quiver.n_vertices)]
    full_mats = []
    for ai, arrow in enumerate(A.quiver.arrows):
        r, c = dim_vec[arrow.target], dim_vec[arrow.source]
        if ai not in mats:
            raise ParseError(f"missing 'arrow {arrow.label} = ...' line")
        data = mats[ai]
        if r == 0 or c == 0:
            if data not in ([], [[]] * r):
                raise ParseError(
                    f"arrow {arrow.label!r}: expected [] for a zero-sided matrix"
                )
            full_mats.append(linalg.zeros(r, c))
            continue
        arr = np.asarray(data, dtype=np.int64)
        if arr.shape != (r, c):
            raise ParseError(
                f"arrow {arrow.label!r}: shape {arr.shape}, expected ({r}, {c})"
            )
        full_mats.append(arr % A.p)
    return reps.Rep(A, dim_vec, full_mats, check=True)


def print_module(M: reps.Rep) -> str:
    q = M.algebra.quiver
    lines = [
        "dims " + " ".join(f"{q.vertices[v]}={M.dims[v]}" for v in range(len(M.dims)))
    ]
    for ai, arrow in enumerate(q.arrows):
        m = M.mats[ai]
        if m.shape[0] == 0 or m.shape[1] == 0:
            literal = "[]"
        else:
            literal = json.dumps(m.tolist(), separators=(",", ":"))
        lines.append(f"arrow {arrow.label} = {literal}")
    return "\n".join(lines) + "\n"
