"""Numerical semigroup toolkit: leap statistics, class tests, and enumeration."""

from .core import (
    DEFAULT_MAX_CONDUCTOR,
    InvalidGap,
    InvalidGenerator,
    LimitExceeded,
    NotASemigroup,
    NotCofinite,
    NumericalSemigroup,
    SemigroupError,
    TrivialSemigroup,
    format_gap_line,
    ordinary,
    parse_gap_line,
)
from .enumeration import (
    DEFAULT_GENUS_CAP,
    CensusRow,
    EnumerationRequest,
    census,
    children,
    enumerate_genus,
    enumerate_kappa_sparse,
    genus_cap,
)
from .ideals import (
    RelativeIdeal,
    ideal_at,
    ideal_difference,
    is_arf_definition,
    is_arf_double,
    is_arf_stable,
    is_stable,
)
from .kappa import (
    Classification,
    InvalidParameters,
    SparsenessReport,
    classify,
    example_family,
    frobenius_identity_check,
    is_kappa_sparse,
    is_kappa_sparse_gapdiff,
    is_kappa_sparse_nongap,
    is_kappa_sparse_profile,
    is_kappa_sparse_run,
    is_pure_kappa_sparse,
    sparseness_index,
    sparseness_report,
)
from .leaps import (
    Leap,
    LeapProfile,
    frobenius_from_profile,
    is_hyperelliptic,
    is_sparse,
    leap_profile,
    leap_set,
    max_leap_jump,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "CensusRow",
    "CheckResult",
    "Classification",
    "DEFAULT_GENUS_CAP",
    "DEFAULT_MAX_CONDUCTOR",
    "EnumerationRequest",
    "InvalidGap",
    "InvalidGenerator",
    "InvalidParameters",
    "Leap",
    "LeapProfile",
    "LimitExceeded",
    "NotASemigroup",
    "NotCofinite",
    "NumericalSemigroup",
    "RelativeIdeal",
    "SemigroupError",
    "SparsenessReport",
    "TrivialSemigroup",
    "census",
    "children",
    "classify",
    "enumerate_genus",
    "enumerate_kappa_sparse",
    "example_family",
    "format_gap_line",
    "frobenius_from_profile",
    "frobenius_identity_check",
    "genus_cap",
    "ideal_at",
    "ideal_difference",
    "is_arf_definition",
    "is_arf_double",
    "is_arf_stable",
    "is_hyperelliptic",
    "is_kappa_sparse",
    "is_kappa_sparse_gapdiff",
    "is_kappa_sparse_nongap",
    "is_kappa_sparse_profile",
    "is_kappa_sparse_run",
    "is_pure_kappa_sparse",
    "is_sparse",
    "is_stable",
    "leap_profile",
    "leap_set",
    "max_leap_jump",
    "ordinary",
    "parse_gap_line",
    "run_checks",
    "sparseness_index",
    "sparseness_report",
]
