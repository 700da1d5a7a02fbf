"""Exhaustive small-case enumeration: modules up to iso, submodule lattices.

These are the brute-force oracles the verification suites compare against,
so they stay independent of the structural operations they certify:
modules come from raw arrow-matrix enumeration, submodules from raw
per-vertex subspace tuples filtered by arrow closure.
"""

from __future__ import annotations

from itertools import product as iter_product

import numpy as np

from . import linalg, reps
from .algebra import Algebra
from .errors import BudgetExceeded

ENUM_BUDGET = 1 << 21
SUBMODULE_BUDGET = 1 << 16

_module_cache: dict[tuple, list] = {}


def dim_vectors(n_vertices: int, total_bound: int):
    """All dimension vectors with entry sum <= total_bound (0 included)."""

    def rec(prefix, remaining, k):
        if k == n_vertices:
            yield tuple(prefix)
            return
        for d in range(remaining + 1):
            yield from rec(prefix + [d], remaining - d, k + 1)

    yield from rec([], total_bound, 0)


def _work_estimate(A: Algebra, bound: int) -> int:
    total = 0
    for dims in dim_vectors(A.quiver.n_vertices, bound):
        w = 1
        for arrow in A.quiver.arrows:
            w *= A.p ** (dims[arrow.target] * dims[arrow.source])
        total += w
    return total


def _signature(M: reps.Rep) -> tuple:
    p = M.algebra.p
    rad_chain = []
    cur = M
    while cur.total_dim > 0 and len(rad_chain) <= M.total_dim:
        nxt = reps.realize(reps.radical(cur))[0]
        rad_chain.append(nxt.dims)
        if nxt.total_dim == cur.total_dim:
            break
        cur = nxt
    soc_dims = reps.socle(M).dims
    ranks = tuple(linalg.rank(m, p) for m in M.mats)
    return (M.dims, ranks, tuple(rad_chain), soc_dims)


def enumerate_modules(
    A: Algebra, total_dim_bound: int, budget: int = ENUM_BUDGET
) -> list[reps.Rep]:
    """All modules of total dimension <= bound, one per iso class.

    The zero module is included.  Work is the number of arrow-matrix
    tuples scanned; BudgetExceeded is raised before any scanning when the
    estimate is above the budget.
    """
    cache_key = (id(A), total_dim_bound)
    if cache_key in _module_cache:
        return list(_module_cache[cache_key])
    estimate = _work_estimate(A, total_dim_bound)
    if estimate > budget:
        raise BudgetExceeded(
            f"module enumeration needs {estimate} candidates; budget {budget}"
        )
    found: list[reps.Rep] = []
    buckets: dict[tuple, list[int]] = {}
    rel_terms = [
        (rel.source, rel.target, rel.terms) for rel in A.relations
    ]
    for dims in dim_vectors(A.quiver.n_vertices, total_dim_bound):
        per_arrow = []
        for arrow in A.quiver.arrows:
            r, c = dims[arrow.target], dims[arrow.source]
            mats = [
                np.array(flat, dtype=np.int64).reshape(r, c)
                for flat in iter_product(range(A.p), repeat=r * c)
            ]
            per_arrow.append(mats)
        for combo in iter_product(*per_arrow) if per_arrow else [()]:
            ok = True
            for src, tgt, terms in rel_terms:
                if dims[src] == 0 or dims[tgt] == 0:
                    continue
                acc = linalg.zeros(dims[tgt], dims[src])
                for coeff, arrows in terms:
                    m = linalg.eye(dims[src])
                    for ai in arrows:
                        m = combo[ai] @ m
                    acc = acc + coeff * m
                if (acc % A.p).any():
                    ok = False
                    break
            if not ok:
                continue
            M = reps.Rep(A, dims, list(combo), check=False)
            sig = _signature(M)
            bucket = buckets.setdefault(sig, [])
            if any(reps.is_isomorphic(M, found[i]) for i in bucket):
                continue
            bucket.append(len(found))
            found.append(M)
    _module_cache[cache_key] = list(found)
    return found


def enumerate_submodules(
    M: reps.Rep, budget: int = SUBMODULE_BUDGET
) -> list[reps.SubRep]:
    """The full submodule lattice: all arrow-closed subspace tuples."""
    p = M.algebra.p
    per_vertex = [list(linalg.all_subspaces(d, p)) for d in M.dims]
    count = 1
    for options in per_vertex:
        count *= len(options)
        if count > budget:
            raise BudgetExceeded(
                f"submodule lattice needs more than {budget} tuples"
            )
    out = []
    for spaces in iter_product(*per_vertex):
        closed = True
        for ai, arrow in enumerate(M.algebra.quiver.arrows):
            src, tgt = spaces[arrow.source], spaces[arrow.target]
            for row in src.basis:
                if not tgt.contains(linalg.mmul(M.mats[ai], row, p)):
                    closed = False
                    break
            if not closed:
                break
        if closed:
            out.append(reps.SubRep(M, tuple(spaces)))
    return out


def maximal_member(subs: list[reps.SubRep], predicate) -> reps.SubRep | None:
    """The inclusion-maximum submodule satisfying the predicate, if any.

    Raises if the satisfying set has no single maximum (the torsion-class
    checks expect one; failure would itself be a finding).
    """
    hits = [s for s in subs if predicate(s)]
    if not hits:
        return None
    best = hits[0]
    for s in hits[1:]:
        if s.contains(best):
            best = s
    for s in hits:
        if not best.contains(s):
            from .errors import ContractViolation

            raise ContractViolation("no maximum element among predicate submodules")
    return best
