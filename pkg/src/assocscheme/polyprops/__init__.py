"""P- and Q-polynomial detection and the integrality diagnostics."""

from .crosscheck import PComparison, QComparison, compare_p_routes, compare_q_routes
from .diagnostics import (
    IntegralityReport,
    SuzukiReport,
    integrality_report,
    suzuki_consistency,
    suzuki_patterns,
)
from .filtration import FiltrationResult, hadamard_filtration
from .ratios import (
    RatioResult,
    lagrange_identity_check,
    lrs_ratios,
    ppoly_criterion_dual,
    qpoly_criterion_main,
)
from .tridiagonal import OrderingWitness, is_irreducible_tridiagonal, tridiagonal_orderings

__all__ = [
    "FiltrationResult",
    "IntegralityReport",
    "OrderingWitness",
    "PComparison",
    "QComparison",
    "RatioResult",
    "SuzukiReport",
    "compare_p_routes",
    "compare_q_routes",
    "hadamard_filtration",
    "integrality_report",
    "is_irreducible_tridiagonal",
    "lagrange_identity_check",
    "lrs_ratios",
    "ppoly_criterion_dual",
    "qpoly_criterion_main",
    "suzuki_consistency",
    "suzuki_patterns",
    "tridiagonal_orderings",
]
