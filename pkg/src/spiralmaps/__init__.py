"""Numerical toolkit for hereditarily spirallike harmonic mappings.

Verifies coefficient and pointwise spirallikeness criteria for planar
harmonic maps f = h + conj(g) of the unit disk, builds the classical
extremal examples and transforms, and renders disk images.
"""

from .series import (
    DEFAULT_ORDER,
    NormalizationError,
    PowerSeries,
    divide,
    exp_series,
    log_derivative_ratio,
    log_series,
    pow_series,
)
from .harmonic import (
    ClosedForm,
    DomainError,
    GridSpec,
    HarmonicMapSpec,
    ScanResult,
    d_operator,
    eval_f,
    grid_points,
    identity_map,
    jacobian,
    nonvanishing_on_grid,
    sense_preserving_on_grid,
)
from .criteria import (
    CheckResult,
    ClassFormError,
    EpsilonScanResult,
    GrowthBounds,
    HypothesisError,
    NearZeroError,
    SpiralParams,
    VerificationReport,
    WeightTable,
    axis_profile,
    epsilon_starlike_check,
    growth_bounds,
    necessary_sharp_check,
    necessary_weighted_check,
    pointwise_fully_starlike_check,
    pointwise_spiral_check,
    run_all_checks,
    silverman_check,
    spiral_inequality_sides,
    spiral_margin,
    spiral_margin_on_grid,
    sufficient_check,
    weight_table,
)
from .construct import (
    CombinationWeights,
    ConstraintError,
    DecompositionError,
    MultiplierSequence,
    catalog,
    catalog_names,
    convex_combination,
    decompose,
    extremal_family,
    multiplier_transfer,
    random_signed_map,
    random_starlike_budget_map,
    random_sufficient_map,
    recombine,
    spirallike_power_transform,
    starlike_associate,
    transform_exponent,
    transform_family_check,
    transform_identity_defect,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ORDER",
    "PowerSeries",
    "NormalizationError",
    "divide",
    "exp_series",
    "log_series",
    "log_derivative_ratio",
    "pow_series",
    "ClosedForm",
    "DomainError",
    "GridSpec",
    "HarmonicMapSpec",
    "ScanResult",
    "d_operator",
    "eval_f",
    "grid_points",
    "identity_map",
    "jacobian",
    "nonvanishing_on_grid",
    "sense_preserving_on_grid",
    "CheckResult",
    "ClassFormError",
    "EpsilonScanResult",
    "GrowthBounds",
    "HypothesisError",
    "NearZeroError",
    "SpiralParams",
    "VerificationReport",
    "WeightTable",
    "axis_profile",
    "epsilon_starlike_check",
    "growth_bounds",
    "necessary_sharp_check",
    "necessary_weighted_check",
    "pointwise_fully_starlike_check",
    "pointwise_spiral_check",
    "run_all_checks",
    "silverman_check",
    "spiral_inequality_sides",
    "spiral_margin",
    "spiral_margin_on_grid",
    "sufficient_check",
    "weight_table",
    "CombinationWeights",
    "ConstraintError",
    "DecompositionError",
    "MultiplierSequence",
    "catalog",
    "catalog_names",
    "convex_combination",
    "decompose",
    "extremal_family",
    "multiplier_transfer",
    "random_signed_map",
    "random_starlike_budget_map",
    "random_sufficient_map",
    "recombine",
    "spirallike_power_transform",
    "starlike_associate",
    "transform_exponent",
    "transform_family_check",
    "transform_identity_defect",
]
