"""Spectral data and P-/Q-polynomial detection for symmetric association schemes."""

from .analysis import AnalysisOptions, AnalysisReport, analyze
from .catalog import CatalogEntry, by_name, cycle, hamming, icosahedron, johnson, petersen
from .fileformat import dump_catalog, load_scheme
from .polyprops import (
    hadamard_filtration,
    integrality_report,
    lagrange_identity_check,
    lrs_ratios,
    ppoly_criterion_dual,
    qpoly_criterion_main,
    suzuki_consistency,
    tridiagonal_orderings,
)
from .scheme_core import IntersectionTensor, RelationTable, from_distance_partition, validate_axioms
from .spectral import (
    KreinTensor,
    SpectralBasis,
    dual_eigenvalue_row,
    krein_parameters,
    primitive_idempotents,
)

__version__ = "0.1.0"
