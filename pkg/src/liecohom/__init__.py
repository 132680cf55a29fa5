"""Exact-arithmetic cohomology of Lie algebras twisted by a closed one-form.

The package computes the cohomology of the complex (Lambda* g*, d + w ^ .)
for finite-dimensional Lie algebras over the rationals, extracts the weight
one-forms of the adjoint flag, the finite exceptional set of weight sums
that controls vanishing, and Betti-number scans along lines of twisting
forms. Every coefficient is an exact rational; there are no tolerances
anywhere.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraClass,
    LieAlgebra,
    OneForm,
    Subspace,
    ValidationReport,
    change_basis,
    classify,
    closed_one_forms,
    derived_subalgebra,
    is_unimodular,
    pullback_one_form,
    validate_lie_algebra,
)
from .catalog import CatalogEntry, load_example
from .cohomology import (
    CohomologyResult,
    betti_numbers,
    cohomology,
    euler_characteristic,
    is_coboundary,
    is_cocycle,
    representatives,
)
from .errors import (
    ComputationDomainError,
    JacobiError,
    LieCohomError,
    NonClosedFormError,
    NotSolvableError,
    NotTriangularizableError,
    StructureError,
)
from .exterior import (
    DifferentialMatrices,
    ExteriorForm,
    ce_differential,
    deformed_differential,
    differential_matrices,
    is_closed,
    wedge,
)
from .linalg import RationalMatrix, in_image, invert, kernel_basis, rank
from .reports import NovikovReport, ScanTable, novikov_report, scan_line
from .serialization import parse_algebra
from .weights import (
    OmegaSet,
    Vanishing,
    WeightData,
    adapted_basis,
    omega_set,
    r0_spectrum,
    vanishing_predicate,
    weight_sum_check,
)

__all__ = [
    "AlgebraClass",
    "CatalogEntry",
    "CohomologyResult",
    "ComputationDomainError",
    "DifferentialMatrices",
    "ExteriorForm",
    "JacobiError",
    "LieAlgebra",
    "LieCohomError",
    "NonClosedFormError",
    "NotSolvableError",
    "NotTriangularizableError",
    "NovikovReport",
    "OmegaSet",
    "OneForm",
    "RationalMatrix",
    "ScanTable",
    "StructureError",
    "Subspace",
    "ValidationReport",
    "Vanishing",
    "WeightData",
    "adapted_basis",
    "betti_numbers",
    "ce_differential",
    "change_basis",
    "classify",
    "closed_one_forms",
    "cohomology",
    "deformed_differential",
    "derived_subalgebra",
    "differential_matrices",
    "euler_characteristic",
    "in_image",
    "invert",
    "is_coboundary",
    "is_closed",
    "is_cocycle",
    "is_unimodular",
    "kernel_basis",
    "load_example",
    "novikov_report",
    "omega_set",
    "parse_algebra",
    "pullback_one_form",
    "r0_spectrum",
    "rank",
    "representatives",
    "scan_line",
    "validate_lie_algebra",
    "vanishing_predicate",
    "wedge",
    "weight_sum_check",
]
