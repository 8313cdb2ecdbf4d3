"""Run the independent routes for one index and compare them.

Q-polynomiality with respect to ``E_e`` is decided three ways:

* ratio route: dual eigenvalues against the first eigenmatrix;
* filtration route: entrywise powers of ``E_e`` projected onto the basis;
* tridiagonal route: support pattern of the Krein parameters.

The routes share only the spectral basis. P-polynomiality with respect to
``A_e`` is decided by the dual ratio route and by the intersection numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotDistinct
from ..scheme_core import IntersectionTensor
from ..spectral import DEFAULT_TOL, KreinTensor, SpectralBasis
from .filtration import FiltrationResult, hadamard_filtration
from .ratios import RatioResult, ppoly_criterion_dual, qpoly_criterion_main
from .tridiagonal import OrderingWitness, tridiagonal_orderings


@dataclass(frozen=True)
class QComparison:
    e: int
    ratio: RatioResult | None
    precondition: str | None
    filtration: FiltrationResult
    witness: OrderingWitness | None

    @property
    def applicable(self) -> bool:
        """The ratio route needs a distinct dual eigenvalue row."""
        return self.ratio is not None

    @property
    def verdicts(self) -> dict:
        v = {"filtration": self.filtration.is_qpoly, "tridiagonal": self.witness is not None}
        if self.ratio is not None:
            v["ratio"] = self.ratio.is_qpoly
        return v

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    @property
    def l_agree(self) -> bool:
        """On a positive case, ratio witness = last of ordering = sole member of N_d."""
        if not (self.agree and self.filtration.is_qpoly):
            return True
        ends = {self.witness.last, *self.filtration.N[-1]}
        if self.ratio is not None:
            ends.add(self.ratio.l_witness)
        return len(ends) == 1 and self.filtration.ordering == self.witness.order

    @property
    def consistent(self) -> bool:
        f = self.filtration
        return self.agree and self.l_agree and f.collapse_ok() and f.singletons_ok()


@dataclass(frozen=True)
class PComparison:
    e: int
    ratio: RatioResult | None
    precondition: str | None
    witness: OrderingWitness | None

    @property
    def agree(self) -> bool:
        if self.ratio is None:
            return True
        if self.ratio.is_ppoly != (self.witness is not None):
            return False
        return not self.ratio.is_ppoly or self.ratio.l_witness == self.witness.last


def compare_q_routes(
    basis: SpectralBasis, krein: KreinTensor, e: int, tol: float = DEFAULT_TOL
) -> QComparison:
    try:
        ratio, why = qpoly_criterion_main(basis, e, tol), None
    except NotDistinct as exc:
        ratio, why = None, f"dual eigenvalues not distinct: {exc}"
    filt = hadamard_filtration(basis, e, tol)
    witness = next((w for w in tridiagonal_orderings(krein, tol) if w.e == e), None)
    return QComparison(e, ratio, why, filt, witness)


def compare_p_routes(
    basis: SpectralBasis, tensor: IntersectionTensor, e: int, tol: float = DEFAULT_TOL
) -> PComparison:
    try:
        ratio, why = ppoly_criterion_dual(basis, e, tol), None
    except NotDistinct as exc:
        ratio, why = None, f"eigenvalues not distinct: {exc}"
    witness = next((w for w in tridiagonal_orderings(tensor, tol) if w.e == e), None)
    return PComparison(e, ratio, why, witness)
