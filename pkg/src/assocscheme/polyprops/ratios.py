"""Product-ratio criteria for the Q- and P-polynomial properties.

For a row ``theta_0..theta_d`` of pairwise distinct values the ratios

    K_i = prod_{j in 1..d, j != i} (theta_0 - theta_j) / (theta_i - theta_j)

are compared against a column of the other eigenmatrix. With the dual
eigenvalues ``q_e(j)`` the scheme is Q-polynomial with respect to ``E_e``
exactly when ``K_i = -p_i(l)`` for all ``i`` and some ``l`` other than ``0``
and ``e``; that ``l`` is then the last idempotent of the Q-ordering. Swapping
the roles of ``P`` and ``Q`` gives the P-polynomial test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import AmbiguousWitness, ClassTooSmall, DegenerateNodes, NotDistinct
from ..spectral import DEFAULT_TOL, SpectralBasis, first_pair_within, is_integral

MATCH_REL_TOL = 1e-6


def lagrange_identity_check(betas, j: int, x: float, tol: float = 1e-8) -> bool:
    """Numerically confirm ``sum_i beta_i^j L_i(x) = x^j`` for ``j < s``.

    ``L_i`` are the Lagrange basis polynomials on the nodes ``betas``. The
    comparison is relative to the largest intermediate magnitude.
    """
    b = np.asarray(betas, dtype=float)
    s = len(b)
    if not 0 <= j <= s - 1:
        raise ValueError(f"j must lie in 0..{s - 1}, got {j}")
    pair = first_pair_within(b, tol)
    if pair is not None:
        raise DegenerateNodes(f"nodes {pair} coincide within tol={tol:g}")
    terms = np.empty(s)
    for i in range(s):
        others = np.delete(b, i)
        terms[i] = b[i] ** j * np.prod((x - others) / (b[i] - others))
    target = float(x) ** j
    scale = max(1.0, abs(target), float(np.abs(terms).max()))
    return bool(abs(terms.sum() - target) <= tol * scale)


def lrs_ratios(theta, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Generalised Larman-Rogers-Seidel ratios ``K_1..K_d`` of a row.

    Parameters
    ----------
    theta : sequence of d+1 floats
        ``theta[0]`` is the trivial value (``m_e`` or ``k_e``).

    Raises
    ------
    ClassTooSmall
        ``d < 2``.
    NotDistinct
        Two entries agree within ``tol``.
    """
    theta = np.asarray(theta, dtype=float)
    d = len(theta) - 1
    if d < 2:
        raise ClassTooSmall("class d >= 2 required")
    pair = first_pair_within(theta, tol)
    if pair is not None:
        raise NotDistinct(theta, pair, tol)
    K = np.empty(d)
    for i in range(1, d + 1):
        js = [j for j in range(1, d + 1) if j != i]
        K[i - 1] = np.prod((theta[0] - theta[js]) / (theta[i] - theta[js]))
    return K


@dataclass(frozen=True)
class RatioResult:
    """Outcome of a ratio criterion for one distinguished index ``e``.

    ``kind`` is ``"Q"`` (dual eigenvalues matched against ``-P``) or ``"P"``
    (eigenvalues matched against ``-Q``). ``l_witness`` is the matched row of
    the other eigenmatrix, or ``None``.
    """

    kind: str
    e: int
    theta: tuple
    K: tuple
    l_witness: int | None
    holds: bool
    integral_flags: tuple
    residuals: dict
    match_tol: float

    @property
    def is_qpoly(self) -> bool:
        return self.kind == "Q" and self.holds

    @property
    def is_ppoly(self) -> bool:
        return self.kind == "P" and self.holds


def _ratio_criterion(kind, theta, other, e, d, tol, match_tol):
    if d < 2:
        raise ClassTooSmall("class d >= 2 required")
    K = lrs_ratios(theta, tol)
    if match_tol is None:
        match_tol = MATCH_REL_TOL * max(1.0, float(np.abs(K).max()))
    residuals = {}
    for l in range(1, d + 1):
        if l == e:
            continue
        residuals[l] = float(np.abs(K + other[l, 1:]).max())
    hits = [l for l, r in residuals.items() if r <= match_tol]
    if len(hits) > 1:
        raise AmbiguousWitness(hits, K)
    l_witness = hits[0] if hits else None
    return RatioResult(
        kind=kind,
        e=e,
        theta=tuple(float(t) for t in theta),
        K=tuple(float(k) for k in K),
        l_witness=l_witness,
        holds=l_witness is not None,
        integral_flags=tuple(bool(f) for f in is_integral(K)),
        residuals=residuals,
        match_tol=match_tol,
    )


def qpoly_criterion_main(
    basis: SpectralBasis, e: int, tol: float = DEFAULT_TOL, match_tol: float | None = None
) -> RatioResult:
    """Decide Q-polynomiality with respect to ``E_e`` from the dual eigenvalues.

    ``K`` comes from ``theta*_j = q_e(j)`` and is compared with ``-P[l, 1:]``
    for every idempotent ``l`` other than ``E_0`` and ``E_e``.

    Raises
    ------
    NotDistinct
        The dual eigenvalue row has a repeated value.
    AmbiguousWitness
        Several ``l`` match; never resolved silently.
    """
    if not 1 <= e <= basis.d:
        raise ValueError(f"e must lie in 1..{basis.d}, got {e}")
    return _ratio_criterion("Q", basis.Q[:, e], basis.P, e, basis.d, tol, match_tol)


def ppoly_criterion_dual(
    basis: SpectralBasis, e: int, tol: float = DEFAULT_TOL, match_tol: float | None = None
) -> RatioResult:
    """P-polynomial mirror of :func:`qpoly_criterion_main`.

    ``K`` comes from the eigenvalues ``p_e(j)`` of ``A_e`` and is compared
    with ``-Q[l, 1:]`` for every relation ``l`` other than ``0`` and ``e``.
    """
    if not 1 <= e <= basis.d:
        raise ValueError(f"e must lie in 1..{basis.d}, got {e}")
    return _ratio_criterion("P", basis.P[:, e], basis.Q, e, basis.d, tol, match_tol)
