"""Primitive idempotents, eigenmatrices and Krein parameters.

The idempotents are found by diagonalising one generic element
``T = sum_i c_i A_i`` of the Bose-Mesner algebra. Its eigenspaces are the
common eigenspaces of all ``A_i`` as soon as the values ``sum_i c_i p_i(j)``
are pairwise distinct, which holds for almost every ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSplit, KreinViolation, NumericalError
from .scheme_core import IntersectionTensor, RelationTable

DEFAULT_TOL = 1e-8
DEFAULT_SEED = 0xA55C13
MAX_RETRIES = 16
CLUSTER_REL_GAP = 1e-6
INTEGRAL_TOL = 1e-6


def is_integral(x, tol: float = INTEGRAL_TOL):
    """Entrywise test ``|x - round(x)| <= tol``; never modifies ``x``."""
    x = np.asarray(x, dtype=float)
    return np.abs(x - np.round(x)) <= tol


@dataclass(frozen=True, eq=False)
class SpectralBasis:
    """Primitive idempotents ``E_0..E_d`` with both eigenmatrices.

    Attributes
    ----------
    idempotents : ndarray, shape (d+1, n, n)
    P : ndarray, shape (d+1, d+1)
        ``P[j, i] = p_i(j)``, the eigenvalue of ``A_i`` on ``E_j``.
    Q : ndarray, shape (d+1, d+1)
        ``Q[j, i] = q_i(j)``, so that ``n E_i = sum_j Q[j, i] A_j``.
    mult : ndarray
        ``m_i = q_i(0) = trace(E_i)``.
    """

    n: int
    d: int
    idempotents: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    mult: np.ndarray
    tolerance: float
    seed: int

    @property
    def eigenvalues(self) -> np.ndarray:
        """``theta_j = p_1(j)``."""
        return self.P[:, 1].copy()

    def invariant_residuals(self, table: RelationTable) -> dict:
        """Max-abs residuals of the defining identities (all should be ~0)."""
        E, n, d = self.idempotents, self.n, self.d
        A = table.adjacency_stack().astype(float)
        prod = np.einsum("iab,jbc->ijac", E, E)
        delta = np.einsum("ij,iac->ijac", np.eye(d + 1), E)
        return {
            "E0": float(np.abs(E[0] - 1.0 / n).max()),
            "sum_E": float(np.abs(E.sum(axis=0) - np.eye(n)).max()),
            "EiEj": float(np.abs(prod - delta).max()),
            "PQ": float(np.abs(self.P @ self.Q - n * np.eye(d + 1)).max()),
            "A_from_E": float(np.abs(np.einsum("ji,jab->iab", self.P, E) - A).max()),
            "E_from_A": float(np.abs(n * E - np.einsum("ji,jab->iab", self.Q, A)).max()),
            "mult": float(np.abs(self.mult - np.round(self.mult)).max()),
        }


@dataclass(frozen=True, eq=False)
class KreinTensor:
    """Krein parameters ``q[i, j, k] = q_ij^k``."""

    d: int
    q: np.ndarray
    min_entry: float

    def check_invariants(self, mult, tol: float = DEFAULT_TOL) -> bool:
        q = self.q
        scale = max(1.0, float(np.max(mult)))
        return bool(
            np.allclose(q, q.transpose(1, 0, 2), atol=tol * scale)
            and self.min_entry >= -tol * scale
            and np.allclose(q.sum(axis=1), np.asarray(mult)[:, None], atol=tol * scale)
        )


def _cluster(values: np.ndarray, gap: float) -> list[np.ndarray]:
    # values sorted ascending, as returned by eigh
    breaks = np.flatnonzero(np.diff(values) > gap) + 1
    return np.split(np.arange(len(values)), breaks)


def _split(A: np.ndarray, d: int, seed: int):
    rng = np.random.default_rng(seed)
    c = rng.uniform(-1.0, 1.0, size=d + 1)
    T = np.einsum("i,iab->ab", c, A)
    w, V = np.linalg.eigh(T)
    radius = max(float(np.abs(w).max()), 1.0)
    groups = _cluster(w, CLUSTER_REL_GAP * radius)
    if len(groups) != d + 1:
        return None
    E = np.stack([V[:, g] @ V[:, g].T for g in groups])
    return 0.5 * (E + E.transpose(0, 2, 1))


def primitive_idempotents(
    table: RelationTable,
    tensor: IntersectionTensor,
    tol: float = DEFAULT_TOL,
    seed: int = DEFAULT_SEED,
    max_retries: int = MAX_RETRIES,
) -> SpectralBasis:
    """Spectral basis of a validated scheme.

    ``E_0`` comes first; the rest are sorted by descending eigenvalue of
    ``A_1``, then ascending multiplicity, then by the remaining columns of
    ``P``. The ordering is cosmetic; detection code never relies on it.

    Raises
    ------
    DegenerateSplit
        No seed in ``seed .. seed + max_retries - 1`` separates ``d + 1``
        eigenspaces.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n, d = table.n, table.d
    A = table.adjacency_stack().astype(float)
    for attempt in range(max_retries):
        used_seed = seed + attempt
        E = _split(A, d, used_seed)
        if E is not None:
            break
    else:
        raise DegenerateSplit(
            f"no seed in {seed}..{seed + max_retries - 1} gave {d + 1} eigenspaces"
        )

    mult = np.trace(E, axis1=1, axis2=2)
    # eigenvalue of A_i on E_j is trace(A_i E_j) / m_j
    P = np.einsum("iab,jab->ji", A, E) / mult[:, None]
    # n E_i restricted to R_j is constant, equal to q_i(j)
    valency = tensor.valency.astype(float)
    Q = n * np.einsum("jab,iab->ji", A, E) / (n * valency[:, None])

    ones = np.full(n, 1.0 / np.sqrt(n))
    first = int(np.argmax([ones @ Ej @ ones for Ej in E]))
    rest = [j for j in range(d + 1) if j != first]
    rest.sort(key=lambda j: (-round(P[j, 1], 9), round(mult[j], 9), *(-round(x, 9) for x in P[j, 2:])))
    order = [first, *rest]

    E = E[order]
    P = P[order]
    Q = Q[:, order]
    mult = mult[order]
    for arr in (E, P, Q, mult):
        arr.setflags(write=False)
    basis = SpectralBasis(
        n=n, d=d, idempotents=E, P=P, Q=Q, mult=mult, tolerance=tol, seed=used_seed
    )
    res = basis.invariant_residuals(table)
    worst = max(res, key=res.get)
    if res[worst] > max(10 * tol, 1e-6):
        raise NumericalError(f"spectral basis fails {worst} identity: residual {res[worst]:.3g}")
    return basis


def krein_parameters(basis: SpectralBasis) -> KreinTensor:
    """``q_ij^k = (n / m_k) trace(E_k (E_i o E_j))``.

    For symmetric ``E_k`` the trace equals the entrywise triple sum, which is
    what gets computed.

    Raises
    ------
    KreinViolation
        Some entry is below ``-10 tol``; the Krein condition is a theorem, so
        this means the basis itself is numerically broken.
    """
    E = basis.idempotents
    q = basis.n * np.einsum("iab,jab,kab->ijk", E, E, E) / basis.mult[None, None, :]
    q = 0.5 * (q + q.transpose(1, 0, 2))
    q.setflags(write=False)
    lo = float(q.min())
    if lo < -10 * basis.tolerance * max(1.0, float(basis.mult.max())):
        idx = np.unravel_index(int(np.argmin(q)), q.shape)
        raise KreinViolation(f"q_{{{idx[0]}{idx[1]}}}^{idx[2]} = {lo:.3g} < 0")
    return KreinTensor(d=basis.d, q=q, min_entry=lo)


def first_pair_within(values, tol: float):
    """Indices of the first pair of entries closer than ``tol``, or ``None``."""
    v = np.asarray(values, dtype=float)
    for a in range(len(v)):
        for b in range(a + 1, len(v)):
            if abs(v[a] - v[b]) <= tol:
                return a, b
    return None


def dual_eigenvalue_row(basis: SpectralBasis, e: int, tol: float | None = None):
    """Dual eigenvalues ``(q_e(0), ..., q_e(d))`` with ``E_e`` in the role of ``E_1``.

    Returns ``(row, distinct)`` where ``distinct`` says every pair of entries
    is separated by more than ``tol``.
    """
    if not 1 <= e <= basis.d:
        raise ValueError(f"e must lie in 1..{basis.d}, got {e}")
    tol = basis.tolerance if tol is None else tol
    row = basis.Q[:, e].copy()
    return row, first_pair_within(row, tol) is None


def eigenvalue_row(basis: SpectralBasis, e: int, tol: float | None = None):
    """Eigenvalues ``(p_e(0), ..., p_e(d))`` of ``A_e``; mirror of :func:`dual_eigenvalue_row`."""
    if not 1 <= e <= basis.d:
        raise ValueError(f"e must lie in 1..{basis.d}, got {e}")
    tol = basis.tolerance if tol is None else tol
    row = basis.P[:, e].copy()
    return row, first_pair_within(row, tol) is None
