"""Comparison-theorem checkers over enumerated and random module samples.

Every checker produces a VerificationReport: hypothesis-violating samples
are counted separately (never as failures), each genuine failure carries a
replayable serialized counterexample, and identical seeds give identical
reports.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import linalg, reps
from .algebra import Algebra
from .enumeration import enumerate_modules
from .errors import ContractViolation
from .findim import verify_cuatrop, verify_test1
from .functors import (
    Functor,
    Identity,
    QuotOf,
    Rad,
    Soc,
    SocQuot,
    TorsGen,
    TorsT,
    TorsX,
    alpha_radical,
    evaluate,
    layer_length,
    radical_layer_length,
    socle_layer_length,
)
from .reports import VerificationReport
from .textio import print_module

DEFAULT_SEED = 0xA17

THEOREMS = (
    "primero",
    "segundo",
    "st",
    "elocho",
    "quotient",
    "soc",
    "top",
    "plusuno",
    "laseis",
    "ladiez",
    "elunico",
    "elcoro",
    "prop2",
    "cuatrop",
    "test1",
)


@dataclass
class VerifyConfig:
    max_dim: int = 4
    n_random: int = 40
    random_size: int = 7
    seed: int = DEFAULT_SEED
    simples: tuple | None = None  # collections of vertex labels; None = all subsets
    pd_cap: int = 20


def _num(v):
    return "inf" if v == math.inf else int(v)


def subsets_of_simples(A: Algebra, cfg: VerifyConfig) -> list[frozenset[int]]:
    if cfg.simples is not None:
        return [
            frozenset(reps._vertex_index(A, s) for s in group)
            for group in cfg.simples
        ]
    nv = A.quiver.n_vertices
    out = []
    for size in range(nv + 1):
        for combo in combinations(range(nv), size):
            out.append(frozenset(combo))
    return out


def _labels(A: Algebra, S) -> list[str]:
    return sorted(A.quiver.vertices[v] for v in S)


def sample_modules(A: Algebra, cfg: VerifyConfig):
    """(enumerated list, extra list): exhaustive small modules plus seeded
    random cokernels and the canonical projective/regular modules."""
    enumerated = enumerate_modules(A, cfg.max_dim)
    rng = random.Random(cfg.seed)
    extras = [reps.random_module(A, cfg.random_size, rng) for _ in range(cfg.n_random)]
    extras.extend(reps.projective(A, v) for v in range(A.quiver.n_vertices))
    extras.append(reps.regular_module(A))
    return list(enumerated), extras


def _random_subrep(M: reps.Rep, rng: random.Random) -> reps.SubRep:
    gens = []
    for d in M.dims:
        if d and rng.random() < 0.8:
            gens.append([np.array([rng.randrange(M.algebra.p) for _ in range(d)])])
        else:
            gens.append([])
    return reps.generated_subrep(M, gens)


def sample_inclusions(A, modules, rng, per_module=1):
    """(sub_rep, inclusion, parent) triples: radical, socle, random subreps."""
    out = []
    for M in modules:
        if M.total_dim == 0:
            continue
        subs = [reps.radical(M), reps.socle(M)]
        for _ in range(per_module):
            subs.append(_random_subrep(M, rng))
        for sub in subs:
            rep, incl = reps.realize(sub)
            out.append((rep, incl, sub, M))
    return out


def sample_epis(A, modules, rng, per_module=1):
    """(parent, projection, quotient) triples through random submodules."""
    out = []
    for M in modules:
        if M.total_dim == 0:
            continue
        subs = [reps.radical(M)]
        for _ in range(per_module):
            subs.append(_random_subrep(M, rng))
        for sub in subs:
            quot, proj = reps.quotient(M, sub)
            out.append((M, proj, quot))
    return out


def _report(theorem, A, cfg, enumerated, extras) -> VerificationReport:
    return VerificationReport(
        theorem=theorem,
        algebra=getattr(A, "name", "algebra"),
        seed=cfg.seed,
        enumerated=len(enumerated),
        random=len(extras),
    )


def torsion_catalog(A: Algebra, subsets) -> list[Functor]:
    """Built-in idempotent radicals: t_S, x_S and TorsGen instances."""
    items: list[Functor] = []
    for S in subsets:
        items.append(TorsT(A, _labels(A, S)))
        items.append(TorsX(A, _labels(A, S)))
    items.append(
        TorsGen(
            [reps.projective(A, v) for v in range(A.quiver.n_vertices)],
            name="gen(projectives)",
        )
    )
    for v in range(A.quiver.n_vertices):
        items.append(
            TorsGen([reps.projective(A, v)], name=f"gen(P{A.quiver.vertices[v]})")
        )
    return items


# ---------------------------------------------------------------------------
# individual checkers


def check_elcoro(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("elcoro", A, cfg, enumerated, extras)
    for S in subsets_of_simples(A, cfg):
        t = TorsT(A, _labels(A, S))
        qx = QuotOf(TorsX(A, _labels(A, S)))
        for M in enumerated + extras:
            lhs = radical_layer_length(t, M)
            rhs = socle_layer_length(qx, M)
            report.checks += 1
            if lhs != rhs:
                report.fail(
                    "ttf-layer-equality",
                    print_module(M),
                    {
                        "simples": _labels(A, S),
                        "radical_layer": _num(lhs),
                        "socle_layer": _num(rhs),
                    },
                )
    return report


def check_prop2(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("prop2", A, cfg, enumerated, extras)
    subsets = subsets_of_simples(A, cfg)
    functors = {S: TorsT(A, _labels(A, S)) for S in subsets}
    values: dict[frozenset, list] = {S: [] for S in subsets}
    pool = enumerated + extras
    for S in subsets:
        for M in pool:
            values[S].append(radical_layer_length(functors[S], M))
    for s1 in subsets:
        for s2 in subsets:
            if not (s1 < s2):
                continue
            for k, M in enumerate(pool):
                report.checks += 1
                if not values[s2][k] <= values[s1][k]:
                    report.fail(
                        "monotonicity",
                        print_module(M),
                        {
                            "smaller": _labels(A, s1),
                            "larger": _labels(A, s2),
                            "dl_smaller": _num(values[s1][k]),
                            "dl_larger": _num(values[s2][k]),
                        },
                    )
    # converse: a strict non-inclusion should exhibit a violating module
    converse = []
    for s1 in subsets:
        for s2 in subsets:
            if s1 <= s2 or not s1 - s2:
                continue
            witness = next(
                (
                    k
                    for k in range(len(pool))
                    if values[s2][k] > values[s1][k]
                ),
                None,
            )
            converse.append(
                {
                    "s1": _labels(A, s1),
                    "s2": _labels(A, s2),
                    "witness_found": witness is not None,
                    "module": print_module(pool[witness]) if witness is not None else "",
                }
            )
    if converse:
        report.notes["converse"] = converse
    return report


def check_primero(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("primero", A, cfg, enumerated, extras)
    subsets = subsets_of_simples(A, cfg)
    pairs = [(Identity(), Rad()), (Soc(), alpha_radical(Soc()))]
    for S in subsets:
        t = TorsT(A, _labels(A, S))
        pairs.append((t, alpha_radical(t)))
        x = TorsX(A, _labels(A, S))
        pairs.append((QuotOf(x), SocQuot(QuotOf(x))))
    pool = enumerated + extras
    for alpha, beta in pairs:
        for M in pool:
            dl = layer_length(alpha, beta, M)
            in_f = evaluate(alpha, M).total_dim == 0
            report.checks += 1
            if (dl == 0) != in_f:
                report.fail(
                    "zero-iff-free",
                    print_module(M),
                    {"alpha": alpha.describe(), "dl": _num(dl), "alpha_zero": in_f},
                )
            if not in_f:
                step = layer_length(alpha, beta, evaluate(beta, M))
                report.checks += 1
                if dl != step + 1:
                    report.fail(
                        "recursion",
                        print_module(M),
                        {
                            "alpha": alpha.describe(),
                            "beta": beta.describe(),
                            "dl": _num(dl),
                            "dl_of_beta": _num(step),
                        },
                    )
    # (c): torsion members recurse through rad and mod-socle
    for S in subsets:
        t = TorsT(A, _labels(A, S))
        for M in pool:
            if M.total_dim == 0 or not t.sub(M).is_full():
                report.hypothesis_violations += M.total_dim > 0
                continue
            rad_rep = reps.realize(reps.radical(M))[0]
            report.checks += 1
            if radical_layer_length(t, M) != radical_layer_length(t, rad_rep) + 1:
                report.fail(
                    "torsion-rad-step",
                    print_module(M),
                    {"simples": _labels(A, S)},
                )
            mod_soc = reps.quotient(M, reps.socle(M))[0]
            report.checks += 1
            if socle_layer_length(t, M) != socle_layer_length(t, mod_soc) + 1:
                report.fail(
                    "torsion-soc-step",
                    print_module(M),
                    {"simples": _labels(A, S)},
                )
    return report


def check_segundo(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("segundo", A, cfg, enumerated, extras)
    rng = random.Random(cfg.seed)
    subsets = subsets_of_simples(A, cfg)
    pairs = [(Identity(), Rad())]
    for S in subsets:
        t = TorsT(A, _labels(A, S))
        pairs.append((t, alpha_radical(t)))
    pool = enumerated + extras
    lam = reps.regular_module(A)

    # (a) direct sums
    pick = pool[:: max(1, len(pool) // 12)]
    for alpha, beta in pairs:
        for M in pick:
            for N in pick:
                total = reps.direct_sum(A, [M, N])
                lhs = layer_length(alpha, beta, total)
                rhs = max(
                    layer_length(alpha, beta, M), layer_length(alpha, beta, N)
                )
                report.checks += 1
                if lhs != rhs:
                    report.fail(
                        "direct-sum",
                        print_module(total),
                        {"alpha": alpha.describe(), "lhs": _num(lhs), "rhs": _num(rhs)},
                    )

    # (b) epimorphisms and the regular bound, for epi-preserving pairs
    epi_pairs = [
        (a, b)
        for a, b in pairs
        if a.meta.preserves_epis == "yes" and b.meta.preserves_epis == "yes"
    ]
    epis = sample_epis(A, pool[:: max(1, len(pool) // 20)], rng)
    for alpha, beta in epi_pairs:
        lam_value = layer_length(alpha, beta, lam)
        for L, proj, M in epis:
            report.checks += 1
            if not layer_length(alpha, beta, M) <= layer_length(alpha, beta, L):
                report.fail(
                    "epi-monotone",
                    print_module(L),
                    {"alpha": alpha.describe(), "beta": beta.describe()},
                )
        for M in pool:
            report.checks += 1
            if not layer_length(alpha, beta, M) <= lam_value:
                report.fail(
                    "regular-bound",
                    print_module(M),
                    {"alpha": alpha.describe(), "lambda": _num(lam_value)},
                )

    # (c) monomorphisms for mono-preserving pairs
    mono_pairs = [
        (a, b)
        for a, b in pairs
        if a.meta.preserves_monos == "yes" and b.meta.preserves_monos == "yes"
    ]
    inclusions = sample_inclusions(A, pool[:: max(1, len(pool) // 20)], rng)
    for alpha, beta in mono_pairs:
        for L, incl, sub, M in inclusions:
            report.checks += 1
            if not layer_length(alpha, beta, L) <= layer_length(alpha, beta, M):
                report.fail(
                    "mono-monotone",
                    print_module(M),
                    {"alpha": alpha.describe(), "sub_dims": list(L.dims)},
                )
    return report


def check_st(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("st", A, cfg, enumerated, extras)
    rng = random.Random(cfg.seed)
    subsets = subsets_of_simples(A, cfg)
    preradicals: list[Functor] = [Rad(), Soc()]
    for S in subsets:
        preradicals.append(TorsT(A, _labels(A, S)))
        preradicals.append(TorsX(A, _labels(A, S)))
    pool = enumerated + extras
    thin = pool[:: max(1, len(pool) // 16)]
    inclusions = sample_inclusions(A, thin, rng)
    for alpha in preradicals:
        # (a) object-level mono naturality: f(a(L)) <= a(M)
        for L, incl, sub, M in inclusions:
            report.checks += 1
            if not alpha.sub(M).contains(incl.apply_subrep(alpha.sub(L))):
                report.fail(
                    "mono-naturality",
                    print_module(M),
                    {"alpha": alpha.describe(), "sub_dims": list(L.dims)},
                )
        # (b) F_alpha closed under submodules and finite coproducts
        free = [M for M in thin if alpha.sub(M).is_zero()]
        for L, incl, sub, M in inclusions:
            if not alpha.sub(M).is_zero():
                continue
            report.checks += 1
            if not alpha.sub(L).is_zero():
                report.fail(
                    "free-submodule",
                    print_module(M),
                    {"alpha": alpha.describe()},
                )
        for M in free[:6]:
            for N in free[:6]:
                report.checks += 1
                if not alpha.sub(reps.direct_sum(A, [M, N])).is_zero():
                    report.fail(
                        "free-coproduct",
                        print_module(reps.direct_sum(A, [M, N])),
                        {"alpha": alpha.describe()},
                    )
        # (c) T_alpha closed under quotients and finite coproducts
        torsion = [M for M in thin if M.total_dim and alpha.sub(M).is_full()]
        for M in torsion:
            quot, _ = reps.quotient(M, _random_subrep(M, rng))
            report.checks += 1
            if not alpha.sub(quot).is_full():
                report.fail(
                    "torsion-quotient",
                    print_module(M),
                    {"alpha": alpha.describe(), "quot_dims": list(quot.dims)},
                )
        for M in torsion[:6]:
            for N in torsion[:6]:
                report.checks += 1
                if not alpha.sub(reps.direct_sum(A, [M, N])).is_full():
                    report.fail(
                        "torsion-coproduct",
                        print_module(reps.direct_sum(A, [M, N])),
                        {"alpha": alpha.describe()},
                    )
        # (d) epi-preserving pre-radicals are radicals
        if alpha.meta.preserves_epis == "yes":
            for M in thin:
                quot, _ = reps.quotient(M, alpha.sub(M))
                report.checks += 1
                if not alpha.sub(quot).is_zero():
                    report.fail(
                        "radical-property",
                        print_module(M),
                        {"alpha": alpha.describe()},
                    )
    return report


def _induced_quotient_mats(f: reps.Morphism, subL: reps.SubRep, subM: reps.SubRep):
    """Matrices of q(f): L/subL -> M/subM for f with f(subL) <= subM."""
    p = f.source.algebra.p
    mats = []
    for v in range(len(f.source.dims)):
        projL, secL = linalg.quotient_map(subL.spaces[v])
        projM, _ = linalg.quotient_map(subM.spaces[v])
        mats.append(linalg.mmul(projM, linalg.mmul(f.mats[v], secL, p), p))
    return mats


def check_elocho(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("elocho", A, cfg, enumerated, extras)
    rng = random.Random(cfg.seed)
    subsets = subsets_of_simples(A, cfg)
    pool = enumerated + extras
    thin = pool[:: max(1, len(pool) // 16)]
    inclusions = sample_inclusions(A, thin, rng)

    def conditions(alpha):
        """(left_exact_ok, sub_closed_and_idempotent_ok, q_mono_ok) sampled."""
        left = sub_closed = q_mono = True
        for L, incl, sub, M in inclusions:
            # left exactness at objects: a(L) = a(M) /\ L
            lhs = incl.apply_subrep(alpha.sub(L))
            rhs = reps.subrep_intersect(alpha.sub(M), incl.image_subrep())
            if lhs != rhs:
                left = False
            # q_alpha preserves monos
            mats = _induced_quotient_mats(incl, alpha.sub(L), alpha.sub(M))
            if any(
                linalg.rank(m, A.p) != m.shape[1] for m in mats if m.shape[1]
            ):
                q_mono = False
        for M in thin:
            a_sub = alpha.sub(M)
            a_rep, _ = reps.realize(a_sub)
            if not alpha.sub(a_rep).is_full():
                sub_closed = False  # idempotence failed
        for L, incl, sub, M in inclusions:
            if alpha.sub(M).is_full() and M.total_dim and L.total_dim:
                if not alpha.sub(L).is_full():
                    sub_closed = False
        return left, sub_closed, q_mono

    positives = [Soc()] + [TorsX(A, _labels(A, S)) for S in subsets]
    for alpha in positives:
        left, sub_closed, q_mono = conditions(alpha)
        report.checks += 3
        if not (left and sub_closed and q_mono):
            report.fail(
                "equivalence-positive",
                "",
                {
                    "alpha": alpha.describe(),
                    "left_exact": left,
                    "sub_closed_idempotent": sub_closed,
                    "q_preserves_monos": q_mono,
                },
            )
    # negative co-occurrence, reported only: where one condition fails,
    # the others should fail on some sample too
    witnesses = []
    for S in subsets:
        alpha = TorsT(A, _labels(A, S))
        left, sub_closed, q_mono = conditions(alpha)
        witnesses.append(
            {
                "alpha": alpha.describe(),
                "left_exact": left,
                "sub_closed_idempotent": sub_closed,
                "q_preserves_monos": q_mono,
                "consistent": (left == sub_closed == q_mono),
            }
        )
    report.notes["torsion_radical_instances"] = witnesses
    report.checks += len(witnesses)
    for w in witnesses:
        if not w["consistent"]:
            report.fail("equivalence-cooccurrence", "", w)
    return report


def check_quotient(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("quotient", A, cfg, enumerated, extras)
    subsets = subsets_of_simples(A, cfg)
    pool = enumerated + extras
    for S in subsets:
        alpha = TorsT(A, _labels(A, S))
        for M in pool:
            if M.total_dim == 0:
                continue
            soc_rep, _ = reps.realize(reps.socle(M))
            if not alpha.sub(soc_rep).is_full():
                report.hypothesis_violations += 1
                continue
            report.checks += 1
            if alpha.sub(M).is_zero():
                report.fail(
                    "not-in-free-class",
                    print_module(M),
                    {"simples": _labels(A, S)},
                )
                continue
            mod_soc = reps.quotient(M, reps.socle(M))[0]
            lhs = radical_layer_length(alpha, mod_soc) + 1
            rhs = radical_layer_length(alpha, M)
            report.checks += 1
            if lhs != rhs:
                report.fail(
                    "socle-step",
                    print_module(M),
                    {
                        "simples": _labels(A, S),
                        "dl_mod_socle_plus_1": _num(lhs),
                        "dl": _num(rhs),
                    },
                )
    return report


def _class_inclusion_holds(alpha_in_free, beta_in_torsion, pool):
    """F_alpha <= T_beta over the sampled pool."""
    for M in pool:
        if alpha_in_free(M) and not beta_in_torsion(M):
            return False, M
    return True, None


def check_soc(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("soc", A, cfg, enumerated, extras)
    subsets = subsets_of_simples(A, cfg)
    pool = enumerated + extras
    radicals = [TorsT(A, _labels(A, S)) for S in subsets] + [
        TorsX(A, _labels(A, S)) for S in subsets
    ]
    preradicals = radicals + [Soc(), Rad()]
    for alpha in preradicals:
        for beta in radicals:
            holds, _ = _class_inclusion_holds(
                lambda M: alpha.sub(M).is_zero(),
                lambda M: beta.sub(M).is_full(),
                pool,
            )
            if not holds:
                report.hypothesis_violations += 1
                continue
            for M in pool:
                X = QuotOf(beta).value(M)
                S_rep, _ = reps.realize(reps.socle(X))
                report.checks += 1
                if not (
                    alpha.sub(S_rep).is_full() and beta.sub(S_rep).is_zero()
                ):
                    report.fail(
                        "socle-of-image",
                        print_module(M),
                        {"alpha": alpha.describe(), "beta": beta.describe()},
                    )
    return report


def check_top(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("top", A, cfg, enumerated, extras)
    subsets = subsets_of_simples(A, cfg)
    pool = enumerated + extras
    idem = [TorsT(A, _labels(A, S)) for S in subsets] + [
        TorsX(A, _labels(A, S)) for S in subsets
    ] + [Soc()]
    preradicals = idem + [Rad()]
    for alpha in idem:
        for beta in preradicals:
            holds, _ = _class_inclusion_holds(
                lambda M: beta.sub(M).is_full(),
                lambda M: alpha.sub(M).is_zero(),
                pool,
            )
            if not holds:
                report.hypothesis_violations += 1
                continue
            for M in pool:
                a_rep, _ = reps.realize(alpha.sub(M))
                t_rep = reps.top(a_rep)
                report.checks += 1
                if not (
                    beta.sub(t_rep).is_zero() and alpha.sub(t_rep).is_full()
                ):
                    report.fail(
                        "top-of-image",
                        print_module(M),
                        {"alpha": alpha.describe(), "beta": beta.describe()},
                    )
    return report


def check_plusuno(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("plusuno", A, cfg, enumerated, extras)
    subsets = subsets_of_simples(A, cfg)
    pool = enumerated + extras
    alphas = [TorsX(A, _labels(A, S)) for S in subsets] + [Soc()]
    for alpha in alphas:
        if QuotOf(alpha).meta.preserves_monos != "yes":
            report.hypothesis_violations += 1
            continue
        q = QuotOf(alpha)
        for M in pool:
            if M.total_dim == 0:
                continue
            top_rep = reps.top(M)
            if not alpha.sub(top_rep).is_zero():
                report.hypothesis_violations += 1
                continue
            report.checks += 1
            if alpha.sub(M).is_full():
                report.fail(
                    "not-in-torsion-class",
                    print_module(M),
                    {"alpha": alpha.describe()},
                )
                continue
            rad_rep, _ = reps.realize(reps.radical(M))
            lhs = socle_layer_length(q, M)
            rhs = socle_layer_length(q, rad_rep) + 1
            report.checks += 1
            if lhs != rhs:
                report.fail(
                    "radical-step",
                    print_module(M),
                    {
                        "alpha": alpha.describe(),
                        "dl_q": _num(lhs),
                        "dl_q_rad_plus_1": _num(rhs),
                    },
                )
    return report


def _comparison(
    A,
    cfg,
    theorem,
    alphas,
    betas,
    inclusion,  # (alpha, beta, M) hypothesis class containment direction
    conclusion,  # returns (lhs, rhs) with lhs <= rhs expected
):
    enumerated, extras = sample_modules(A, cfg)
    report = _report(theorem, A, cfg, enumerated, extras)
    pool = enumerated + extras
    converse = []
    for alpha in alphas:
        for beta in betas:
            holds, _ = inclusion(alpha, beta, pool)
            if holds:
                for M in pool:
                    lhs, rhs = conclusion(alpha, beta, M)
                    report.checks += 1
                    if not lhs <= rhs:
                        report.fail(
                            "comparison",
                            print_module(M),
                            {
                                "alpha": alpha.describe(),
                                "beta": beta.describe(),
                                "lhs": _num(lhs),
                                "rhs": _num(rhs),
                            },
                        )
            else:
                witness = None
                for M in pool:
                    lhs, rhs = conclusion(alpha, beta, M)
                    if not lhs <= rhs:
                        witness = M
                        break
                converse.append(
                    {
                        "alpha": alpha.describe(),
                        "beta": beta.describe(),
                        "witness_found": witness is not None,
                        "module": print_module(witness) if witness is not None else "",
                    }
                )
    if converse:
        report.notes["converse"] = converse
    return report


def check_laseis(A, cfg: VerifyConfig) -> VerificationReport:
    subsets = subsets_of_simples(A, cfg)
    alphas = [
        f
        for f in torsion_catalog(A, subsets)
        if f.meta.radical == "yes" and f.meta.preserves_epis == "yes"
    ]
    betas = [f for f in torsion_catalog(A, subsets) if f.meta.radical == "yes"]

    def inclusion(alpha, beta, pool):
        return _class_inclusion_holds(
            lambda M: alpha.sub(M).is_zero(),
            lambda M: beta.sub(M).is_full(),
            pool,
        )

    def conclusion(alpha, beta, M):
        return (
            socle_layer_length(QuotOf(beta), M),
            radical_layer_length(alpha, M),
        )

    return _comparison(A, cfg, "laseis", alphas, betas, inclusion, conclusion)


def check_ladiez(A, cfg: VerifyConfig) -> VerificationReport:
    subsets = subsets_of_simples(A, cfg)
    alphas = [
        f
        for f in torsion_catalog(A, subsets)
        if f.meta.preradical == "yes" and f.meta.idempotent == "yes"
    ] + [Soc()]
    betas = [
        f
        for f in torsion_catalog(A, subsets) + [Soc(), Identity()]
        if QuotOf(f).meta.preserves_monos == "yes"
    ]

    def inclusion(alpha, beta, pool):
        return _class_inclusion_holds(
            lambda M: beta.sub(M).is_full(),
            lambda M: alpha.sub(M).is_zero(),
            pool,
        )

    def conclusion(alpha, beta, M):
        return (
            radical_layer_length(alpha, M),
            socle_layer_length(QuotOf(beta), M),
        )

    return _comparison(A, cfg, "ladiez", alphas, betas, inclusion, conclusion)


def check_elunico(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    report = _report("elunico", A, cfg, enumerated, extras)
    subsets = subsets_of_simples(A, cfg)
    pool = enumerated + extras
    pairs = []
    for S in subsets:
        pairs.append((TorsT(A, _labels(A, S)), TorsX(A, _labels(A, S))))
        if S:
            pairs.append(
                (
                    TorsT(A, _labels(A, S)),
                    TorsGen(
                        [reps.simple(A, v) for v in sorted(S)],
                        name="gen(" + ",".join(_labels(A, S)) + ")",
                    ),
                )
            )
    for t, t_prime in pairs:
        # sanity of the matching condition F_t = T_{t'}
        for M in pool[:: max(1, len(pool) // 10)]:
            if t.sub(M).is_zero() != t_prime.sub(M).is_full():
                report.hypothesis_violations += 1
                break
        else:
            for M in pool:
                lhs = radical_layer_length(t, M)
                rhs = socle_layer_length(QuotOf(t_prime), M)
                report.checks += 1
                if lhs != rhs:
                    report.fail(
                        "torsion-equality",
                        print_module(M),
                        {
                            "t": t.describe(),
                            "t_prime": t_prime.describe(),
                            "lhs": _num(lhs),
                            "rhs": _num(rhs),
                        },
                    )
    # converse: mismatched theories should break the equality somewhere
    converse = []
    for s1 in subsets:
        for s2 in subsets:
            if s1 == s2:
                continue
            t = TorsT(A, _labels(A, s1))
            x = TorsX(A, _labels(A, s2))
            matching = all(
                t.sub(M).is_zero() == x.sub(M).is_full() for M in pool
            )
            if matching:
                continue
            witness = next(
                (
                    M
                    for M in pool
                    if radical_layer_length(t, M)
                    != socle_layer_length(QuotOf(x), M)
                ),
                None,
            )
            converse.append(
                {
                    "t": t.describe(),
                    "x": x.describe(),
                    "witness_found": witness is not None,
                    "module": print_module(witness) if witness is not None else "",
                }
            )
    if converse:
        report.notes["converse"] = converse
    return report


def check_cuatrop(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    merged = _report("cuatrop", A, cfg, enumerated, extras)
    pool = enumerated + extras
    for S in subsets_of_simples(A, cfg):
        sub = verify_cuatrop(
            A,
            _labels(A, S),
            pool,
            algebra_name=getattr(A, "name", "algebra"),
            seed=cfg.seed,
        )
        merged.checks += sub.checks
        merged.hypothesis_violations += sub.hypothesis_violations
        for f in sub.failures:
            f["detail"]["simples"] = _labels(A, S)
            merged.failures.append(f)
    return merged


def check_test1(A, cfg: VerifyConfig) -> VerificationReport:
    enumerated, extras = sample_modules(A, cfg)
    merged = _report("test1", A, cfg, enumerated, extras)
    for S in subsets_of_simples(A, cfg):
        sub = verify_test1(
            A,
            _labels(A, S),
            pd_cap=cfg.pd_cap,
            max_dim=cfg.max_dim,
            extra_modules=extras,
            algebra_name=getattr(A, "name", "algebra"),
            seed=cfg.seed,
        )
        merged.checks += sub.checks
        merged.hypothesis_violations += sub.hypothesis_violations
        for f in sub.failures:
            f["detail"]["simples"] = _labels(A, S)
            merged.failures.append(f)
    return merged


_CHECKERS = {
    "primero": check_primero,
    "segundo": check_segundo,
    "st": check_st,
    "elocho": check_elocho,
    "quotient": check_quotient,
    "soc": check_soc,
    "top": check_top,
    "plusuno": check_plusuno,
    "laseis": check_laseis,
    "ladiez": check_ladiez,
    "elunico": check_elunico,
    "elcoro": check_elcoro,
    "prop2": check_prop2,
    "cuatrop": check_cuatrop,
    "test1": check_test1,
}


def verify_comparison(kind: str, A: Algebra, cfg: VerifyConfig | None = None) -> VerificationReport:
    """Run one named comparison-theorem suite and return its report."""
    if kind not in _CHECKERS:
        raise ContractViolation(
            f"unknown theorem {kind!r}; choose from {', '.join(THEOREMS)}"
        )
    cfg = cfg or VerifyConfig()
    start = time.monotonic()
    report = _CHECKERS[kind](A, cfg)
    report.elapsed = time.monotonic() - start
    return report
