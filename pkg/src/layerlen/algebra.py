"""Bound quiver algebras Lambda = kQ/I over F_p.

Paths are stored in traversal order (first arrow traversed first); the
product x*y is "apply y, then x" (function order), so a path written
``b*a`` in relation text traverses a first.  Construction enumerates all
paths up to a length cap, spans the relation ideal inside that path space,
and picks the basis of the quotient greedily by (length, label sequence);
multiplication of basis elements is concatenation followed by projection
back onto the chosen basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    AlgebraMismatch,
    ContractViolation,
    MalformedRelation,
    NotAdmissibleWithinCap,
    UnknownVertex,
)

PATH_BUDGET = 50_000


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int  # vertex index
    target: int


class Quiver:
    """A finite quiver with labeled vertices and arrows."""

    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ContractViolation("duplicate vertex labels")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        arr = []
        seen = set()
        for label, src, tgt in arrows:
            label = str(label)
            if label in seen or label in self.vertex_index:
                raise ContractViolation(f"duplicate or clashing label {label!r}")
            seen.add(label)
            arr.append(Arrow(label, self._vx(src), self._vx(tgt)))
        self.arrows = tuple(arr)
        self.arrow_index = {a.label: i for i, a in enumerate(self.arrows)}
        self.arrows_from = [
            [i for i, a in enumerate(self.arrows) if a.source == v]
            for v in range(len(self.vertices))
        ]
        self.arrows_into = [
            [i for i, a in enumerate(self.arrows) if a.target == v]
            for v in range(len(self.vertices))
        ]

    def _vx(self, v) -> int:
        v = str(v)
        if v not in self.vertex_index:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return self.vertex_index[v]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Path:
    """A path in the quiver; ``arrows`` in traversal order."""

    arrows: tuple[int, ...]
    source: int
    target: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    def labels(self, quiver: Quiver) -> tuple[str, ...]:
        return tuple(quiver.arrows[i].label for i in self.arrows)

    def text(self, quiver: Quiver) -> str:
        if not self.arrows:
            return f"e{quiver.vertices[self.source]}"
        # printed in function order: last-traversed arrow leftmost
        return "*".join(reversed(self.labels(quiver)))


class Relation:
    """A linear combination of parallel paths of length >= 2.

    ``terms`` is a list of (coefficient, arrow-index tuple in traversal
    order); all terms share one source and one target vertex.
    """

    def __init__(self, quiver: Quiver, terms, p: int):
        parsed = []
        src = tgt = None
        for coeff, labels in terms:
            if len(labels) < 2:
                raise MalformedRelation("relation path shorter than 2 arrows")
            idxs = []
            for lab in labels:
                if lab not in quiver.arrow_index:
                    raise MalformedRelation(f"unknown arrow {lab!r} in relation")
                idxs.append(quiver.arrow_index[lab])
            s = quiver.arrows[idxs[0]].source
            t = quiver.arrows[idxs[-1]].target
            for a, b in zip(idxs, idxs[1:]):
                if quiver.arrows[a].target != quiver.arrows[b].source:
                    raise MalformedRelation(
                        "arrows do not compose: "
                        + "*".join(reversed([quiver.arrows[i].label for i in idxs]))
                    )
            if src is None:
                src, tgt = s, t
            elif (s, t) != (src, tgt):
                raise MalformedRelation("relation terms are not parallel")
            coeff = int(coeff) % p
            if coeff:
                parsed.append((coeff, tuple(idxs)))
        if not parsed:
            raise MalformedRelation("relation is identically zero")
        self.terms = tuple(parsed)
        self.source = src
        self.target = tgt

    def max_length(self) -> int:
        return max(len(t) for _, t in self.terms)

    def text(self, quiver: Quiver) -> str:
        parts = []
        for coeff, idxs in self.terms:
            word = "*".join(reversed([quiver.arrows[i].label for i in idxs]))
            parts.append(word if coeff == 1 else f"{coeff}*{word}")
        return "+".join(parts)


class Algebra:
    """A bound quiver algebra with explicit path basis and product table."""

    def __init__(self, quiver, p, relations, basis, mult, nil_index, length_cap):
        self.quiver = quiver
        self.p = p
        self.relations = tuple(relations)
        self.basis = tuple(basis)  # reduced Paths, (length, labels) order
        self.mult = mult  # mult[i, j, :] = coords of basis_i * basis_j
        self.nil_index = nil_index
        self.length_cap = length_cap
        self.dim = len(basis)
        self.idempotent_index = {}
        for k, path in enumerate(self.basis):
            if path.length == 0:
                self.idempotent_index[path.source] = k
        self.arrow_basis_index = {}
        for k, path in enumerate(self.basis):
            if path.length == 1:
                self.arrow_basis_index[path.arrows[0]] = k
        self.basis_source = np.array([b.source for b in self.basis])
        self.basis_target = np.array([b.target for b in self.basis])

    def elem_mult(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of two algebra elements in basis coordinates."""
        x = np.asarray(x, dtype=np.int64) % self.p
        y = np.asarray(y, dtype=np.int64) % self.p
        return np.einsum("i,j,ijk->k", x, y, self.mult) % self.p

    def unit(self) -> np.ndarray:
        one = np.zeros(self.dim, dtype=np.int64)
        for k in self.idempotent_index.values():
            one[k] = 1
        return one

    def basis_texts(self) -> list[str]:
        return [b.text(self.quiver) for b in self.basis]

    def same(self, other: "Algebra") -> bool:
        return self is other

    def __repr__(self):
        return (
            f"Algebra(p={self.p}, dim={self.dim}, vertices={self.quiver.vertices},"
            f" nil_index={self.nil_index})"
        )


def _enumerate_paths(quiver: Quiver, cap: int) -> list[Path]:
    paths = [Path((), v, v) for v in range(quiver.n_vertices)]
    frontier = list(paths)
    for _ in range(cap):
        nxt = []
        for path in frontier:
            for ai in quiver.arrows_from[path.target]:
                nxt.append(
                    Path(path.arrows + (ai,), path.source, quiver.arrows[ai].target)
                )
        paths.extend(nxt)
        if len(paths) > PATH_BUDGET:
            raise NotAdmissibleWithinCap(
                f"more than {PATH_BUDGET} paths below length cap {cap};"
                " lower the cap"
            )
        if not nxt:
            break
        frontier = nxt
    paths.sort(key=lambda q: (q.length, q.labels(quiver)))
    return paths


def build_algebra(quiver: Quiver, relations, field_p: int, length_cap: int = 12) -> Algebra:
    """Construct kQ/I with path basis, product table and nil index.

    Raises NotAdmissibleWithinCap unless some power of the arrow ideal is
    contained in the relation span within the cap (which certifies J^N = 0).
    """
    p = linalg.check_prime(field_p)
    if length_cap < 2:
        raise ContractViolation("length_cap must be >= 2")
    rels = [r if isinstance(r, Relation) else Relation(quiver, r, p) for r in relations]
    for r in rels:
        if r.max_length() > length_cap:
            raise MalformedRelation("relation longer than the length cap")

    paths = _enumerate_paths(quiver, length_cap)
    # trivial paths share arrows=(); key on (arrows, source)
    index = {(q.arrows, q.source): k for k, q in enumerate(paths)}
    n = len(paths)
    by_source = {}
    by_target = {}
    for k, q in enumerate(paths):
        by_source.setdefault(q.source, []).append(k)
        by_target.setdefault(q.target, []).append(k)

    # span of the two-sided ideal in degrees <= cap: all u * r * v
    ideal = linalg.RrefAccumulator(n, p)
    for r in rels:
        for vk in by_target.get(r.source, []):
            v = paths[vk]
            for uk in by_source.get(r.target, []):
                u = paths[uk]
                if v.length + r.max_length() + u.length > length_cap:
                    continue
                vec = np.zeros(n, dtype=np.int64)
                for coeff, arrows in r.terms:
                    key = (v.arrows + arrows + u.arrows, v.source)
                    vec[index[key]] = (vec[index[key]] + coeff) % p
                ideal.add(vec)

    ideal_space = ideal.to_subspace()

    # greedy complement: shortest/lexicographically-earliest paths first
    work = linalg.RrefAccumulator(n, p)
    if ideal_space.dim:
        work.add_rows(ideal_space.basis)
    basis_paths = []
    basis_unit_rows = []
    for k, q in enumerate(paths):
        e = np.zeros(n, dtype=np.int64)
        e[k] = 1
        if work.add(e):
            basis_paths.append(q)
            basis_unit_rows.append(e)
    dim = len(basis_paths)

    # nil index: least N with every length-N path inside the ideal span
    nil_index = None
    by_length = {}
    for k, q in enumerate(paths):
        by_length.setdefault(q.length, []).append(k)
    for length in range(1, length_cap + 1):
        ks = by_length.get(length, [])
        def in_ideal(k):
            e = np.zeros(n, dtype=np.int64)
            e[k] = 1
            return ideal.contains(e)
        if all(in_ideal(k) for k in ks):
            nil_index = length
            break
    if nil_index is None:
        raise NotAdmissibleWithinCap(
            f"paths of length {length_cap} do not all reduce into the relation"
            " ideal; the ideal is not admissible within the cap"
        )

    # projection of the path space onto the chosen basis modulo the ideal
    stacked = (
        np.concatenate([ideal_space.basis, np.array(basis_unit_rows)], axis=0)
        if ideal_space.dim
        else np.array(basis_unit_rows)
    )
    binv = linalg.invert_matrix(stacked.T, p)  # columns are the basis of F^n

    def coords(vec: np.ndarray) -> np.ndarray:
        full = (binv @ vec) % p
        return full[ideal_space.dim :]

    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, x in enumerate(basis_paths):
        for j, y in enumerate(basis_paths):
            # x * y: traverse y, then x
            if y.target != x.source:
                continue
            if x.length + y.length >= nil_index:
                continue  # lands in J^nil = 0
            key = (y.arrows + x.arrows, y.source)
            e = np.zeros(n, dtype=np.int64)
            e[index[key]] = 1
            mult[i, j] = coords(e)

    return Algebra(quiver, p, rels, basis_paths, mult, nil_index, length_cap)


@dataclass(frozen=True, eq=False)
class Ideal:
    """A left (optionally two-sided) ideal, spanned inside the path basis."""

    algebra: Algebra
    span: linalg.Subspace
    two_sided: bool = False

    @property
    def dim(self) -> int:
        return self.span.dim

    def is_zero(self) -> bool:
        return self.span.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.algebra is other.algebra
            and self.span == other.span
        )

    def __hash__(self):
        return hash((id(self.algebra), self.span))


def _closure_flags(A: Algebra, span: linalg.Subspace) -> tuple[bool, bool]:
    """(left_closed, right_closed) of a subspace under basis multiplication."""
    left = right = True
    for row in span.basis:
        for i in range(A.dim):
            e = np.zeros(A.dim, dtype=np.int64)
            e[i] = 1
            if left and not span.contains(A.elem_mult(e, row)):
                left = False
            if right and not span.contains(A.elem_mult(row, e)):
                right = False
        if not (left or right):
            break
    return left, right


def ideal_from_span(A: Algebra, rows, check: bool = True) -> Ideal:
    span = linalg.Subspace.from_rows(rows, A.p, ambient=A.dim)
    if check:
        left, right = _closure_flags(A, span)
        if not left:
            raise ContractViolation("span is not closed under left multiplication")
        return Ideal(A, span, two_sided=right)
    return Ideal(A, span, two_sided=False)


def jacobson_radical(A: Algebra) -> Ideal:
    """J = rad(Lambda): the span of all basis paths of length >= 1."""
    rows = []
    for k, path in enumerate(A.basis):
        if path.length >= 1:
            e = np.zeros(A.dim, dtype=np.int64)
            e[k] = 1
            rows.append(e)
    if not rows:
        return Ideal(A, linalg.Subspace.zero(A.p, A.dim), two_sided=True)
    return Ideal(A, linalg.Subspace.from_rows(rows, A.p, ambient=A.dim), two_sided=True)


def ideal_product(i1: Ideal, i2: Ideal) -> Ideal:
    """Span of all products x*y with x in i1, y in i2."""
    if i1.algebra is not i2.algebra:
        raise AlgebraMismatch("ideal product across different algebras")
    A = i1.algebra
    acc = linalg.RrefAccumulator(A.dim, A.p)
    for x in i1.span.basis:
        for y in i2.span.basis:
            acc.add(A.elem_mult(x, y))
    return Ideal(A, acc.to_subspace(), two_sided=i1.two_sided and i2.two_sided)


def ideal_power_chain(A: Algebra, ideal: Ideal, max_power: int) -> list[Ideal]:
    """[I, I^2, ..., I^max_power] computed by repeated products."""
    chain = [ideal]
    for _ in range(max_power - 1):
        chain.append(ideal_product(chain[-1], ideal))
        if chain[-1].is_zero():
            break
    return chain
