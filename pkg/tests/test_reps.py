import random

import numpy as np
import pytest

from layerlen import reps
from layerlen.algebra import jacobson_radical
from layerlen.errors import ContractViolation
from layerlen.reps import (
    Rep,
    direct_sum,
    find_isomorphism,
    generated_subrep,
    hom_space,
    is_isomorphic,
    is_projective,
    proj_dim,
    projective,
    projective_cover,
    quotient,
    radical,
    random_module,
    realize,
    regular_module,
    simple,
    socle,
    syzygy,
    syzygy_power,
    top,
    zero_rep,
)


def sample_pool(A, n=12, size=7, seed=5):
    rng = random.Random(seed)
    pool = [random_module(A, size, rng) for _ in range(n)]
    pool += [simple(A, v) for v in range(A.quiver.n_vertices)]
    pool += [projective(A, v) for v in range(A.quiver.n_vertices)]
    pool.append(regular_module(A))
    return pool


def test_simple_and_projective_fixtures(A1, A2):
    assert simple(A2, "1").dims == (1, 0, 0)
    P1 = projective(A2, "1")
    assert P1.dims == (1, 1, 0)
    assert np.array_equal(P1.mats[0], [[1]])
    P = projective(A1, "1")
    assert P.dims == (3,)
    loop = P.mats[0]
    assert np.array_equal(loop @ loop @ loop % 2, np.zeros((3, 3)))
    assert np.linalg.matrix_rank(loop) == 2  # Jordan block of order 3


def test_regular_module_dims(A1, A2, A3):
    assert regular_module(A1).dims == (3,)
    assert regular_module(A2).dims == (1, 2, 2)
    assert regular_module(A3).dims == (1, 2)
    # arrowless algebra: direct sum of the simples
    from layerlen.algebra import Quiver, build_algebra

    semi = build_algebra(Quiver(["1", "2", "3"], []), [], 2)
    assert regular_module(semi).dims == (1, 1, 1)


def test_radical_socle_top_fixtures(A2):
    P1, P2 = projective(A2, "1"), projective(A2, "2")
    assert radical(P1).dims == (0, 1, 0)  # the S2 copy
    assert top(P1).dims == (1, 0, 0)
    assert socle(P2).dims == (0, 0, 1)  # the S3 copy
    S2 = simple(A2, "2")
    assert radical(S2).is_zero()
    assert socle(S2).dims == S2.dims


def test_quotient_fixtures(A2):
    P2 = projective(A2, "2")
    q0, proj0 = quotient(P2, reps.zero_subrep(P2))
    assert q0.dims == P2.dims and proj0.is_iso()
    qfull, _ = quotient(P2, reps.full_subrep(P2))
    assert qfull.is_zero()
    qsoc, proj = quotient(P2, socle(P2))
    assert qsoc.dims == (0, 1, 0)
    assert proj.kernel_subrep() == socle(P2)


def test_explicit_presentation_of_s2(A2):
    # P3 -> P2 with image the socle realizes S2 as a cokernel
    P2, P3 = projective(A2, "2"), projective(A2, "3")
    maps = hom_space(P3, P2)
    assert len(maps) == 1
    coker, _ = quotient(P2, maps[0].image_subrep())
    assert coker.dims == (0, 1, 0)


def test_generated_subrep(A2):
    P1 = projective(A2, "1")
    full = generated_subrep(P1, [[np.array([1])], [], []])
    assert full.is_full()
    soc_vec = generated_subrep(P1, [[], [np.array([1])], []])
    assert soc_vec.dims == (0, 1, 0)
    nothing = generated_subrep(P1, [[], [], []])
    assert nothing.is_zero()


def test_hom_space_fixtures(A2):
    S1, S2 = simple(A2, "1"), simple(A2, "2")
    P1 = projective(A2, "1")
    assert hom_space(S1, S2) == []
    assert len(hom_space(P1, P1)) == 1
    assert len(hom_space(P1, S1)) == 1


def test_iso_reflexive_and_distinguishes(A2):
    S1, S2 = simple(A2, "1"), simple(A2, "2")
    assert is_isomorphic(S1, S1)
    assert not is_isomorphic(S1, S2)


def test_iso_after_base_change(A2):
    rng = random.Random(3)
    P2 = projective(A2, "2")
    from layerlen import linalg

    gs = []
    for d in P2.dims:
        while True:
            g = np.array([[rng.randrange(2) for _ in range(d)] for _ in range(d)])
            if linalg.is_invertible(g, 2) or d == 0:
                break
        gs.append(g if d else linalg.zeros(0, 0))
    mats = []
    for ai, arrow in enumerate(A2.quiver.arrows):
        g_t, g_s = gs[arrow.target], gs[arrow.source]
        m = P2.mats[ai]
        if 0 in m.shape:
            mats.append(m)
            continue
        mats.append(g_t @ m @ linalg.invert_matrix(g_s, 2) % 2)
    other = Rep(A2, P2.dims, mats)
    w = find_isomorphism(P2, other)
    assert w is not None and w.is_iso()


def test_projective_cover_fixtures(A2):
    S1 = simple(A2, "1")
    P, cover = projective_cover(S1)
    assert P.dims == projective(A2, "1").dims
    assert cover.is_epi()
    # cover of a projective is an isomorphism
    P1 = projective(A2, "1")
    P_of_P1, cover1 = projective_cover(P1)
    assert cover1.is_iso()
    # cover of rad(P1) = S2 is P2
    rad_rep, _ = realize(radical(P1))
    P_of_rad, _ = projective_cover(rad_rep)
    assert P_of_rad.dims == projective(A2, "2").dims


def test_projective_cover_minimality(algebras):
    rng = random.Random(9)
    for A in algebras.values():
        for _ in range(8):
            M = random_module(A, 7, rng)
            if M.total_dim == 0:
                continue
            P, cover = projective_cover(M)
            assert cover.is_epi()
            assert radical(P).contains(cover.kernel_subrep())


def test_syzygy_chain_a2(A2):
    S1 = simple(A2, "1")
    assert syzygy(S1).dims == (0, 1, 0)
    assert syzygy_power(S1, 2).dims == (0, 0, 1)
    assert syzygy_power(S1, 3).is_zero()


def test_syzygy_a1(A1):
    S = simple(A1, "1")
    O1 = syzygy(S)
    assert O1.dims == (2,)  # k[x]/(x^2)
    O2 = syzygy(O1)
    assert is_isomorphic(O2, S)  # periodicity


def test_syzygy_kills_projectives(A2):
    for v in range(3):
        assert syzygy(projective(A2, v)).is_zero()
        assert is_projective(projective(A2, v))


def test_proj_dim_fixtures(A1, A2):
    assert proj_dim(simple(A2, "1")) == reps.PdResult(True, 2)
    assert proj_dim(simple(A2, "2")) == reps.PdResult(True, 1)
    assert proj_dim(simple(A2, "3")) == reps.PdResult(True, 0)
    assert proj_dim(projective(A2, "1")) == reps.PdResult(True, 0)
    for cap in (1, 4, 9):
        res = proj_dim(simple(A1, "1"), cap=cap)
        assert res == reps.PdResult(False, cap)


def test_act_matches_radical(algebras):
    rng = random.Random(21)
    for A in algebras.values():
        J = jacobson_radical(A)
        for _ in range(10):
            M = random_module(A, 8, rng)
            assert reps.act(J, M) == radical(M)
            # zero ideal acts as zero
            from layerlen.algebra import Ideal
            from layerlen import linalg

            zero = Ideal(A, linalg.Subspace.zero(A.p, A.dim), two_sided=True)
            assert reps.act(zero, M).is_zero()


def test_artinian_facts_sampled(algebras):
    for A in algebras.values():
        for M in sample_pool(A):
            M.validate()
            rad = radical(M)
            assert top(M).total_dim + rad.total_dim == M.total_dim
            if M.total_dim:
                assert socle(M).total_dim > 0
                assert rad.total_dim < M.total_dim
            # quotient by the radical is semisimple
            t = top(M)
            assert radical(t).is_zero()


def test_rad_functoriality(algebras):
    rng = random.Random(33)
    for A in algebras.values():
        for M in sample_pool(A, n=6):
            if M.total_dim == 0:
                continue
            # epi onto a quotient: the image of rad is the rad of the image
            gens = [
                [np.array([rng.randrange(A.p) for _ in range(d)])] if d else []
                for d in M.dims
            ]
            sub = generated_subrep(M, gens)
            Q, proj = quotient(M, sub)
            assert proj.apply_subrep(radical(M)) == radical(Q)
            # mono from a submodule: rad maps into rad
            L, incl = realize(sub)
            assert radical(M).contains(incl.apply_subrep(radical(L)))


def test_syzygy_additive(algebras):
    rng = random.Random(37)
    for A in algebras.values():
        for _ in range(5):
            M = random_module(A, 6, rng)
            N = random_module(A, 6, rng)
            left = syzygy(direct_sum(A, [M, N]))
            right = direct_sum(A, [syzygy(M), syzygy(N)])
            assert is_isomorphic(left, right)


def test_random_module_deterministic(A2):
    a = [random_module(A2, 7, random.Random(99)).key() for _ in range(5)]
    b = [random_module(A2, 7, random.Random(99)).key() for _ in range(5)]
    assert a == b


def test_morphism_validation(A2):
    P1 = projective(A2, "1")
    # identity at vertex 1 with zero at vertex 2 breaks the square of arrow a
    with pytest.raises(ContractViolation):
        reps.Morphism(
            P1, P1, [np.array([[1]]), np.array([[0]]), np.zeros((0, 0))]
        )
    _, cover = projective_cover(simple(A2, "1"))
    cover.validate()


def test_zero_rep(A2):
    z = zero_rep(A2)
    assert z.is_zero()
    assert proj_dim(z) == reps.PdResult(True, 0)
    P, cover = projective_cover(z)
    assert P.is_zero() and cover.is_epi()
