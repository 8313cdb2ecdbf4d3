import numpy as np
import pytest

from assocscheme.catalog import by_name, hamming
from assocscheme.errors import DegenerateSplit
from assocscheme.scheme_core import RelationTable, validate_axioms
from assocscheme.spectral import (
    dual_eigenvalue_row,
    is_integral,
    primitive_idempotents,
)
from conftest import analysed
from oracles import classical_krein, graph_spectrum, hamming_P

NAMES = ["pentagon", "cycle:8", "cube", "hamming:4,2", "hamming:2,3", "petersen", "icosahedron"]


def test_single_edge_basis():
    table = RelationTable([[0, 1], [1, 0]])
    b = primitive_idempotents(table, validate_axioms(table))
    J = np.ones((2, 2))
    np.testing.assert_allclose(b.idempotents[0], J / 2, atol=1e-12)
    np.testing.assert_allclose(b.idempotents[1], np.eye(2) - J / 2, atol=1e-12)
    np.testing.assert_allclose(b.P, [[1, 1], [1, -1]], atol=1e-12)


def test_petersen_spectrum_matches_eigensolver(petersen):
    vals, mults = graph_spectrum(petersen.table.adjacency(1))
    assert vals == pytest.approx([3, 1, -2])
    assert mults == [1, 5, 4]
    np.testing.assert_allclose(petersen.basis.P[:, 1], [3, 1, -2], atol=1e-9)
    np.testing.assert_allclose(petersen.basis.mult, [1, 5, 4], atol=1e-9)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hamming_against_krawtchouk(d):
    a = analysed(f"hamming:{d},2")
    np.testing.assert_allclose(a.basis.P, hamming_P(d, 2), atol=1e-9)


def test_cube_values(cube):
    np.testing.assert_allclose(cube.basis.P[:, 1], [3, 1, -1, -3], atol=1e-9)
    np.testing.assert_allclose(cube.basis.mult, [1, 3, 3, 1], atol=1e-9)


@pytest.mark.parametrize("name", NAMES)
def test_basis_identities(name):
    a = analysed(name)
    res = a.basis.invariant_residuals(a.table)
    assert max(res.values()) <= 10 * a.basis.tolerance
    m = np.round(a.basis.mult)
    assert np.all(m >= 1) and m.sum() == a.table.n


@pytest.mark.parametrize("name", NAMES)
def test_krein_against_classical_formula(name):
    a = analysed(name)
    b = a.basis
    ref = classical_krein(b.P, b.mult, a.tensor.valency, b.n)
    np.testing.assert_allclose(a.krein.q, ref, atol=1e-8)
    assert a.krein.check_invariants(b.mult)
    np.testing.assert_allclose(a.krein.q[0], np.eye(b.d + 1), atol=1e-9)


def test_petersen_krein_tridiagonal(petersen):
    np.testing.assert_allclose(
        petersen.krein.q[1], [[0, 1, 0], [5, 20 / 9, 20 / 9], [0, 16 / 9, 25 / 9]], atol=1e-9
    )


def test_pentagon_is_formally_self_dual(pentagon):
    np.testing.assert_allclose(pentagon.krein.q, pentagon.tensor.p, atol=1e-9)


def test_dual_eigenvalue_rows(petersen, cube):
    row, distinct = dual_eigenvalue_row(petersen.basis, 1)
    np.testing.assert_allclose(row, [5, 5 / 3, -5 / 3], atol=1e-9)
    assert distinct
    row, distinct = dual_eigenvalue_row(cube.basis, 1)
    np.testing.assert_allclose(row, [3, 1, -1, -3], atol=1e-9)
    assert distinct
    _, distinct = dual_eigenvalue_row(cube.basis, 2)
    assert not distinct


def test_determinism():
    table = by_name("icosahedron").table
    t = validate_axioms(table)
    a = primitive_idempotents(table, t)
    b = primitive_idempotents(table, t)
    assert a.seed == b.seed
    assert a.idempotents.tobytes() == b.idempotents.tobytes()
    assert a.P.tobytes() == b.P.tobytes() and a.Q.tobytes() == b.Q.tobytes()


def test_ordering_rule(icosahedron):
    b = icosahedron.basis
    np.testing.assert_allclose(b.idempotents[0], 1 / 12, atol=1e-12)
    assert np.all(np.diff(b.P[1:, 1]) < 0)


def test_degenerate_split_after_retries():
    table = hamming(2, 2).table
    t = validate_axioms(table)
    with pytest.raises(DegenerateSplit):
        primitive_idempotents(table, t, max_retries=0)


def test_is_integral_does_not_mutate():
    x = np.array([1.0000001, 2.4])
    assert is_integral(x).tolist() == [True, False]
    assert x[0] == 1.0000001
