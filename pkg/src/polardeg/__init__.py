"""Polar degrees of singular projective hypersurfaces.

Two independent routes to the same integer: exact closed-form evaluation
over a declarative singularity profile, and a numerical count of the
regular points in a generic fiber of the projective gradient map.
"""

from polardeg.poly import (
    ParseError,
    Polynomial,
    deform,
    degree,
    evaluate_complex,
    gradient,
    is_homogeneous,
    parse,
    substitute_affine_chart,
)
from polardeg.profiles import (
    CurveComponent,
    IsolatedPoint,
    ProfileSchemaError,
    SingularityProfile,
    SpecialPoint,
)
from polardeg.formulas import (
    InconsistentProfileError,
    MissingSectionalDataError,
    PolResult,
    alpha_beta_split,
    alpha_jump,
    chi_hypersurface,
    chi_slice,
    chi_smooth,
    cone_chi_fiber,
    cone_pol_check,
    cone_profile,
    consistency_check,
    curve_coefficient,
    homaloidal_filter,
    lower_bounds,
    pol_isolated,
    pol_one_dim,
    semicontinuity_expectation,
    union_pol,
    yomdin_inequality,
    yomdin_local_mu,
    yomdin_pol,
    yomdin_transversal_mu,
)
from polardeg.oracle import (
    FiberSystem,
    OracleReport,
    PathBudgetError,
    TrackResult,
    TrackerConfig,
    VerifyReport,
    build_fiber_system,
    generic_slice,
    random_linear_form,
    solve_count,
    start_system,
    track_path,
    verify,
)
from polardeg.catalog import CatalogEntry, load_catalog, run_entry, suite_entries

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry",
    "CurveComponent",
    "FiberSystem",
    "InconsistentProfileError",
    "IsolatedPoint",
    "MissingSectionalDataError",
    "OracleReport",
    "ParseError",
    "PathBudgetError",
    "PolResult",
    "Polynomial",
    "ProfileSchemaError",
    "SingularityProfile",
    "SpecialPoint",
    "TrackResult",
    "TrackerConfig",
    "VerifyReport",
    "alpha_beta_split",
    "alpha_jump",
    "build_fiber_system",
    "chi_hypersurface",
    "chi_slice",
    "chi_smooth",
    "cone_chi_fiber",
    "cone_pol_check",
    "cone_profile",
    "consistency_check",
    "curve_coefficient",
    "deform",
    "degree",
    "evaluate_complex",
    "generic_slice",
    "gradient",
    "homaloidal_filter",
    "is_homogeneous",
    "load_catalog",
    "lower_bounds",
    "parse",
    "pol_isolated",
    "pol_one_dim",
    "random_linear_form",
    "run_entry",
    "semicontinuity_expectation",
    "solve_count",
    "start_system",
    "substitute_affine_chart",
    "suite_entries",
    "track_path",
    "union_pol",
    "verify",
    "yomdin_inequality",
    "yomdin_local_mu",
    "yomdin_pol",
    "yomdin_transversal_mu",
]
