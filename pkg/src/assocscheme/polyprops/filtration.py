"""Hadamard-power filtration of the Bose-Mesner algebra.

``N_h`` collects the idempotents that first show up as components of the
``h``-th entrywise power of ``E_e``. The scheme is Q-polynomial with respect
to ``E_e`` iff ``N_d`` is nonempty, in which case every ``N_h`` is a
singleton and ``N_h = {i_h}`` spells out the ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..spectral import SpectralBasis


@dataclass(frozen=True)
class FiltrationResult:
    e: int
    N: tuple
    leftover: tuple
    first_power: tuple
    min_coefficient: float

    @property
    def d(self) -> int:
        return len(self.N) - 1

    @property
    def is_qpoly(self) -> bool:
        return len(self.N[-1]) > 0

    @property
    def ordering(self) -> tuple | None:
        """``(i_0, ..., i_d)`` when every ``N_h`` is a singleton."""
        if all(len(s) == 1 for s in self.N):
            return tuple(s[0] for s in self.N)
        return None

    def collapse_ok(self) -> bool:
        """An empty ``N_h`` (h < d) forces ``N_{h+1}`` empty."""
        return all(self.N[h + 1] == () for h in range(1, self.d) if self.N[h] == ())

    def singletons_ok(self) -> bool:
        """A nonempty ``N_d`` forces every ``N_h`` to be a singleton."""
        return not self.is_qpoly or self.ordering is not None


def hadamard_filtration(
    basis: SpectralBasis, e: int, tol: float | None = None
) -> FiltrationResult:
    """Compute ``N_0..N_d`` for the powers ``E_e^{o h}``, ``h = 0..d``.

    ``E_j`` counts as a component of ``M`` when
    ``||E_j M||_F > tol * ||M||_F``. ``min_coefficient`` is the most negative
    coordinate of any power in the idempotent basis; it is ``>= -tol`` up to
    rounding because every power is a nonnegative combination.
    """
    d = basis.d
    if not 1 <= e <= d:
        raise ValueError(f"e must lie in 1..{d}, got {e}")
    tol = basis.tolerance if tol is None else tol
    E = basis.idempotents
    first = [None] * (d + 1)
    H = np.ones((basis.n, basis.n))
    min_coef = np.inf
    for h in range(d + 1):
        # keep the power at unit norm; entries of E_e shrink geometrically
        H = H / np.linalg.norm(H)
        proj = np.einsum("jab,bc->jac", E, H)
        norms = np.linalg.norm(proj, axis=(1, 2))
        coef = np.einsum("jab,ab->j", E, H) / basis.mult
        min_coef = min(min_coef, float(coef.min()))
        for j in range(d + 1):
            if first[j] is None and norms[j] > tol:
                first[j] = h
        H = H * E[e]
    N = tuple(tuple(j for j in range(d + 1) if first[j] == h) for h in range(d + 1))
    leftover = tuple(j for j in range(d + 1) if first[j] is None)
    return FiltrationResult(
        e=e, N=N, leftover=leftover, first_power=tuple(first), min_coefficient=min_coef
    )
