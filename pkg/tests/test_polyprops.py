from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from assocscheme.errors import AmbiguousWitness, ClassTooSmall, DegenerateNodes, NotDistinct
from assocscheme.polyprops import (
    OrderingWitness,
    compare_q_routes,
    hadamard_filtration,
    integrality_report,
    lagrange_identity_check,
    lrs_ratios,
    ppoly_criterion_dual,
    qpoly_criterion_main,
    suzuki_consistency,
    suzuki_patterns,
    tridiagonal_orderings,
)
from assocscheme.scheme_core import RelationTable, validate_axioms
from conftest import analysed
from oracles import exact_ratios, lagrange_sum


# -- interpolation identity -------------------------------------------------

def test_lagrange_examples():
    assert lagrange_identity_check([1, 2], 0, 7)
    assert lagrange_sum([3, 1, -1, -3], 2, 0) == 0
    assert lagrange_identity_check([3, 1, -1, -3], 2, 0)
    with pytest.raises(DegenerateNodes):
        lagrange_identity_check([1, 1 + 1e-12, 2], 0, 0.5)


def test_lagrange_rejects_degree_out_of_range():
    with pytest.raises(ValueError):
        lagrange_identity_check([1, 2], 2, 0.0)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(-100, 100), min_size=1, max_size=8, unique=True),
    st.data(),
    st.floats(-10, 10, allow_nan=False),
)
def test_lagrange_property(nodes, data, x):
    betas = [v / 10 for v in nodes]
    j = data.draw(st.integers(0, len(betas) - 1))
    assert lagrange_identity_check(betas, j, x, 1e-8)


# -- ratios ----------------------------------------------------------------

def test_lrs_cube_and_petersen():
    np.testing.assert_allclose(lrs_ratios([3, 1, -1, -3]), [3, -3, 1], atol=1e-12)
    assert exact_ratios([3, 1, -1, -3]) == [3, -3, 1]
    np.testing.assert_allclose(lrs_ratios([5, 5 / 3, -5 / 3]), [2, -1], atol=1e-12)
    assert exact_ratios([5, Fraction(5, 3), Fraction(-5, 3)]) == [2, -1]


def test_lrs_preconditions():
    with pytest.raises(ClassTooSmall):
        lrs_ratios([1, -1])
    with pytest.raises(NotDistinct):
        lrs_ratios([3, -1, -1, 3])


def test_qpoly_petersen(petersen):
    r = qpoly_criterion_main(petersen.basis, 1)
    assert r.is_qpoly and r.l_witness == 2
    np.testing.assert_allclose(r.K, [2, -1], atol=1e-9)
    assert r.integral_flags == (True, True)


def test_qpoly_cube(cube):
    r = qpoly_criterion_main(cube.basis, 1)
    assert r.is_qpoly and r.l_witness == 3
    np.testing.assert_allclose(r.K, [3, -3, 1], atol=1e-9)
    np.testing.assert_allclose(r.K, -cube.basis.P[3, 1:], atol=1e-6)


def test_qpoly_negative_case():
    # H(3,3) with E_2 in the role of E_1: distinct dual eigenvalues, not Q-polynomial
    a = analysed("hamming:3,3")
    r = qpoly_criterion_main(a.basis, 2)
    assert not r.is_qpoly and r.l_witness is None
    assert not any(w.e == 2 for w in tridiagonal_orderings(a.krein))


def test_qpoly_repeated_row(cube):
    with pytest.raises(NotDistinct):
        qpoly_criterion_main(cube.basis, 2)


def test_ambiguous_witness_is_reported(cube):
    with pytest.raises(AmbiguousWitness) as info:
        qpoly_criterion_main(cube.basis, 1, match_tol=100.0)
    assert len(info.value.candidates) == 2


def test_ratio_eigenvalue_link(petersen, cube):
    """A_i E_l = p_i(l) E_l and K_i = -p_i(l)."""
    for a in (petersen, cube):
        r = qpoly_criterion_main(a.basis, 1)
        El = a.basis.idempotents[r.l_witness]
        for i in range(1, a.table.d + 1):
            Ai = a.table.adjacency(i)
            np.testing.assert_allclose(Ai @ El, -r.K[i - 1] * El, atol=1e-8)


def test_ppoly_dual(petersen, cube):
    r = ppoly_criterion_dual(petersen.basis, 1)
    assert r.is_ppoly and r.l_witness == 2
    r = ppoly_criterion_dual(cube.basis, 1)
    assert r.is_ppoly and r.l_witness == 3
    with pytest.raises(NotDistinct):
        ppoly_criterion_dual(cube.basis, 2)


@pytest.mark.parametrize("name", ["cube", "pentagon"])
def test_self_dual_schemes_mirror(name):
    a = analysed(name)
    q = qpoly_criterion_main(a.basis, 1)
    p = ppoly_criterion_dual(a.basis, 1)
    np.testing.assert_allclose(q.K, p.K, atol=1e-6)
    assert q.l_witness == p.l_witness


# -- filtration ------------------------------------------------------------

@pytest.mark.parametrize("name", ["petersen", "cube", "pentagon", "icosahedron", "hamming:3,3"])
def test_filtration_starts(name):
    a = analysed(name)
    for e in range(1, a.table.d + 1):
        f = hadamard_filtration(a.basis, e)
        assert f.N[0] == (0,) and f.N[1] == (e,)
        assert f.collapse_ok() and f.singletons_ok()
        assert f.min_coefficient >= -1e-8
        seen = sorted(j for s in f.N for j in s) + list(f.leftover)
        assert sorted(seen) == list(range(a.table.d + 1))


def test_filtration_petersen(petersen):
    f = hadamard_filtration(petersen.basis, 1)
    assert f.N == ((0,), (1,), (2,))
    assert f.is_qpoly and f.ordering == (0, 1, 2)


def test_filtration_cube_e2_agrees_with_ratio_precondition(cube):
    f = hadamard_filtration(cube.basis, 2)
    assert not f.is_qpoly
    assert f.leftover


# -- tridiagonal -----------------------------------------------------------

def test_pentagon_p_witnesses(pentagon):
    orders = {w.order for w in tridiagonal_orderings(pentagon.tensor)}
    assert orders == {(0, 1, 2), (0, 2, 1)}
    assert all(w.kind == "P" for w in tridiagonal_orderings(pentagon.tensor))


def test_petersen_q_witness(petersen):
    ws = tridiagonal_orderings(petersen.krein)
    assert [w.order for w in ws if w.e == 1] == [(0, 1, 2)]
    assert all(w.kind == "Q" for w in ws)


def test_tridiagonal_rejects_class_one():
    t = validate_axioms(RelationTable([[0, 1], [1, 0]]))
    with pytest.raises(ClassTooSmall):
        tridiagonal_orderings(t)


def test_raw_array_needs_kind(petersen):
    with pytest.raises(ValueError):
        tridiagonal_orderings(np.asarray(petersen.tensor.p))
    assert tridiagonal_orderings(np.asarray(petersen.tensor.p), kind="P")


# -- diagnostics -------------------------------------------------------------

@pytest.mark.parametrize("d", range(2, 12))
def test_suzuki_patterns_are_permutations(d):
    for seq in suzuki_patterns(d).values():
        assert sorted(seq) == list(range(d + 1)) and seq[0] == 0


def test_suzuki_patterns_d5():
    pats = suzuki_patterns(5)
    assert pats[1] == (0, 2, 4, 5, 3, 1)
    assert pats[2] == (0, 5, 1, 4, 2, 3)
    assert pats[3] == (0, 5, 2, 3, 4, 1)
    assert pats[4] == (0, 4, 2, 3, 1, 5)
    assert pats[5] == (0, 5, 3, 2, 4, 1)
    assert 5 not in suzuki_patterns(4)


def test_suzuki_reports(petersen, pentagon, icosahedron):
    ws = tridiagonal_orderings(petersen.krein)
    rep = suzuki_consistency(ws[:1], 2, petersen.basis.mult[1])
    assert rep.status == "unique ordering"
    ws = tridiagonal_orderings(pentagon.krein)
    rep = suzuki_consistency(ws, 2, pentagon.basis.mult[ws[0].e])
    assert rep.status == "skipped" and "m_1 = 2" in rep.note
    ws = tridiagonal_orderings(icosahedron.krein)
    rep = suzuki_consistency(ws, 3, icosahedron.basis.mult[ws[0].e])
    assert rep.status == "checked" and not rep.violation
    assert rep.comparisons[0]["patterns"] == [3]


def test_suzuki_flags_inadmissible_ordering():
    ws = [OrderingWitness("Q", (0, 1, 2, 3, 4, 5)), OrderingWitness("Q", (0, 1, 3, 2, 4, 5))]
    assert suzuki_consistency(ws, 5, 3.0).violation


def test_integrality(petersen, pentagon, icosahedron):
    w = OrderingWitness("Q", (0, 1, 2))
    rep = integrality_report(petersen.basis, w, qpoly_criterion_main(petersen.basis, 1).K)
    assert rep.hypothesis and rep.all_integral and not rep.contradiction
    rep = integrality_report(pentagon.basis, w, qpoly_criterion_main(pentagon.basis, 1).K)
    assert not rep.hypothesis and not any(rep.integral_flags)
    w = OrderingWitness("Q", (0, 1, 2, 3))
    K = qpoly_criterion_main(icosahedron.basis, 1).K
    np.testing.assert_allclose(K, [5**0.5, -(5**0.5), 1], atol=1e-9)
    rep = integrality_report(icosahedron.basis, w, K)
    assert not rep.hypothesis and not rep.all_integral and not rep.contradiction


def test_integrality_contradiction_marker(petersen):
    w = OrderingWitness("Q", (0, 1, 2))
    rep = integrality_report(petersen.basis, w, [2.5, -1.0])
    assert rep.contradiction


def test_compare_routes_records_precondition(cube):
    c = compare_q_routes(cube.basis, cube.krein, 2)
    assert c.ratio is None and "not distinct" in c.precondition
    assert c.agree and c.consistent
