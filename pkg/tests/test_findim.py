import random

import pytest

from layerlen import reps
from layerlen.enumeration import enumerate_modules
from layerlen.errors import HypothesisFailed
from layerlen.findim import (
    IndecRegistry,
    annihilated_by,
    bigteo_bound,
    brute_findim,
    decompose,
    int_rank,
    is_nakayama,
    j_ell_ideal,
    mhlm2_bound,
    nakayama_indecomposables,
    phi,
    psi,
    psi_dim,
    simples_finite_pd,
    verify_cuatrop,
    verify_test1,
)
from layerlen.functors import TorsT, radical_layer_length
from layerlen.reps import (
    direct_sum,
    is_isomorphic,
    projective,
    random_module,
    regular_module,
    simple,
    syzygy,
)


def test_int_rank():
    assert int_rank([{0: 1}, {1: 1}], 2) == 2
    assert int_rank([{0: 2, 1: 4}, {0: 1, 1: 2}], 2) == 1
    assert int_rank([], 3) == 0
    assert int_rank([{}], 3) == 0


def test_decompose_fixtures(A2):
    P1 = projective(A2, "1")
    d = decompose(direct_sum(A2, [P1, P1]))
    assert d.witness_ok and not d.heuristic
    assert len(d.summands) == 1
    rep, mult, cert = d.summands[0]
    assert mult == 2 and cert == "certified" and is_isomorphic(rep, P1)

    d = decompose(regular_module(A2))
    assert sorted(x.dims for x, _, _ in d.summands) == [
        (0, 0, 1),
        (0, 1, 1),
        (1, 1, 0),
    ]
    d = decompose(simple(A2, "2"))
    assert len(d.summands) == 1 and d.summands[0][1] == 1
    assert d.summands[0][2] == "certified"


def test_decompose_multiset_union(A2):
    rng = random.Random(55)
    for _ in range(4):
        M = random_module(A2, 6, rng)
        N = random_module(A2, 6, rng)
        left = decompose(direct_sum(A2, [M, N]))
        a, b = decompose(M), decompose(N)
        merged: list = []
        for rep, mult, _ in a.summands + b.summands:
            for k, (other, count) in enumerate(merged):
                if is_isomorphic(rep, other):
                    merged[k] = (other, count + mult)
                    break
            else:
                merged.append((rep, mult))
        assert sorted((sum(r.dims), m) for r, m in merged) == sorted(
            (sum(r.dims), m) for r, m, _ in left.summands
        )


def test_phi_psi_fixtures(A1, A2):
    S1 = simple(A2, "1")
    assert phi(S1) == (2, [1, 1, 0])
    assert psi(S1).psi == 2
    assert phi(projective(A2, "1"))[0] == 0
    S = simple(A1, "1")
    omega = syzygy(S)
    value, table = phi(direct_sum(A1, [S, omega]))
    assert value == 0 and table[0] == 2
    assert psi(S).psi == 0
    assert psi(reps.zero_rep(A2)).psi == 0


def test_psi_report_invariants(A2):
    reg = IndecRegistry(A2, 20)
    for M in enumerate_modules(A2, 3):
        rep = psi(M, registry=reg)
        assert rep.psi >= rep.phi
        assert all(a >= b for a, b in zip(rep.rank_table, rep.rank_table[1:]))
        pd = reps.proj_dim(M, 20)
        if pd.finite:
            assert rep.psi == pd.value
        # recomputation is stable
        assert psi(M, registry=reg).phi == rep.phi


def test_psi_dim(A2):
    assert psi_dim([]) == 0
    assert psi_dim(enumerate_modules(A2, 3)) == 2
    assert psi_dim([projective(A2, v) for v in "123"]) == 0


def test_simples_finite_pd(A1, A2, A3):
    finite, verdicts = simples_finite_pd(A2)
    assert finite == {0, 1, 2}
    assert {k: v.value for k, v in verdicts.items()} == {"1": 2, "2": 1, "3": 0}
    finite, verdicts = simples_finite_pd(A1, pd_cap=8)
    assert finite == set()
    assert not verdicts["1"].finite
    finite, _ = simples_finite_pd(A3)
    assert finite == {0, 1}


def test_nakayama_detection(A1, A2, A3):
    assert is_nakayama(A1) and is_nakayama(A2) and is_nakayama(A3)
    indec = nakayama_indecomposables(A2)
    # A2 has 5 indecomposables: P1, P2, S1, S2, S3
    assert len(indec) == 5


def test_rkalg_annihilator_classes(A2):
    from itertools import combinations

    labels = A2.quiver.vertices
    mods = enumerate_modules(A2, 3)
    for size in range(4):
        for combo in combinations(range(3), size):
            S = frozenset(combo)
            t = TorsT(A2, [labels[v] for v in combo])
            for ell in (0, 1, 2):
                ideal = j_ell_ideal(A2, S, ell)
                for M in mods:
                    lhs = radical_layer_length(t, M) <= ell
                    assert lhs == annihilated_by(ideal, M)


def test_brute_findim(A1, A2, A3):
    assert brute_findim(A2, 3) == 2
    assert brute_findim(A3, 3) == 1
    assert brute_findim(A1, 3) == 0


def test_mhlm2_values(A2, A3):
    rep = mhlm2_bound(A2, [], algebra_name="A2")
    assert rep.bound == 4 and rep.beta == 0 and rep.psi_dim == 1
    assert rep.status == "ok"
    assert rep.brute_lower_bound == 2 and rep.bound >= rep.brute_lower_bound
    rep = mhlm2_bound(A2, ["1", "2", "3"], algebra_name="A2")
    assert rep.bound == 5 and rep.beta == 2 and rep.psi_dim == 0
    rep = mhlm2_bound(A3, [], algebra_name="A3")
    assert rep.bound == 3 and rep.brute_lower_bound == 1


def test_radcube_mode(A2):
    rep = mhlm2_bound(A2, ["1"], algebra_name="A2", mode="radcube")
    # radcube ignores the simples and uses S = empty
    assert rep.simples == [] and rep.bound == 4


def test_bigteo_values(A2):
    rep = bigteo_bound(A2, ["1", "2", "3"], 0, enum_bound=3, algebra_name="A2")
    assert rep.bound == 4 and rep.beta == 2 and rep.psi_dim == 2
    assert "psi_dim_exact_nakayama" in rep.flags
    assert rep.bound >= rep.brute_lower_bound == 2
    # S = empty, ell = 1: J_1 = Lambda (J Lambda)^1 = J, so the class is the
    # semisimple modules (20 of the 22 classes below total dim 3)
    rep = bigteo_bound(A2, [], 1, enum_bound=3, algebra_name="A2")
    assert rep.status == "ok"
    assert rep.detail["class_size_enumerated"] == 20
    assert rep.bound >= 2


def test_bigteo_hypothesis_failures(A1, A2):
    with pytest.raises(HypothesisFailed) as exc:
        bigteo_bound(A1, ["1"], 1, algebra_name="A1")
    assert exc.value.report is not None
    assert exc.value.report.status == "hypothesis-failed"
    assert exc.value.report.bound is None
    # layer-length hypothesis violated: dl^{t_empty}(Lambda) = 2 > 2*0+1 = 1
    with pytest.raises(HypothesisFailed):
        bigteo_bound(A2, [], 0, algebra_name="A2")


def test_mhlm2_hypothesis_failure(A1):
    with pytest.raises(HypothesisFailed):
        mhlm2_bound(A1, ["1"], algebra_name="A1")


def test_verify_cuatrop(A2):
    pool = enumerate_modules(A2, 3)
    for S in ([], ["2"], ["1", "2", "3"]):
        report = verify_cuatrop(A2, S, pool, algebra_name="A2")
        assert report.status == "pass"
        assert report.checks + report.hypothesis_violations >= len(pool) - 1


def test_verify_test1(A2):
    for S in ([], ["2"], ["1", "2", "3"]):
        report = verify_test1(A2, S, max_dim=3, algebra_name="A2")
        assert report.status == "pass"
        assert report.checks > 0


def test_verify_test1_skips_infinite_pd(A1):
    report = verify_test1(A1, ["1"], max_dim=3, algebra_name="A1")
    assert report.hypothesis_violations == 1
    assert report.checks == 0
