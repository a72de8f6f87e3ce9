"""Exact-arithmetic toolkit for additive maps on plane curves over
finite fields of odd characteristic.

The central question: given a curve C in the affine plane over
F_{p^k}, does a nonzero additive map f (an F_p-linear map of the
field) exist with f(x) * f(y) = 0 at every affine point (x, y) of C?
Two independent deciders answer it exactly, several forcing bounds
predict when the answer must be "no", and a valuation module builds
the explicit counterexample construction on rational function fields.

Everything is exact integer arithmetic; no floats anywhere near a
verdict.
"""

from .additive import (
    LinearizedMap,
    Subspace,
    enumerate_all_maps,
    enumerate_hyperplanes,
    eval_map,
    hyperplane_functionals,
    trace_functional,
)
from .caps import DEFAULT_FIELD_CAP, DEFAULT_ORACLE_CAP, field_cap, oracle_cap
from .cover import (
    AnalysisReport,
    BoundReport,
    CoverVerdict,
    analyze,
    conic_bound,
    conic_claimed,
    conjectural_by_count,
    decide_by_exhaustion,
    decide_by_hyperplanes,
    elliptic_bound,
    elliptic_claimed,
    verify_witness,
    zero_forcing_by_count,
    zero_forcing_inequality,
)
from .curve import (
    Curve,
    HWWindow,
    PointSet,
    affine_points,
    axis_parallel_lines,
    hasse_weil_window,
    load_curve_file,
    parse_curve_file,
    points_at_infinity_count,
    singular_points,
    slice_degree_profile,
    slice_surface,
)
from .errors import (
    CapExceeded,
    ContextMismatch,
    CurvaddError,
    Inconsistent,
    ParseError,
)
from .fields import FqContext, FqElement, embed, is_prime, make_context
from .poly import (
    QQ,
    RationalFunction,
    SparsePoly,
    UniPoly,
    bipoly_eval,
    field_domain,
    parse_bipoly,
    parse_poly,
    partial_derivative,
)
from .valuation import (
    INFINITY,
    check_x_or_inverse,
    degree_valuation,
    ext2_family_check,
    h_additive,
    in_valuation_ring,
    padic_valuation,
    random_rational_function,
    random_unipoly,
    trivial_valuation,
    verify_valuation_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundReport",
    "CapExceeded",
    "ContextMismatch",
    "CoverVerdict",
    "Curve",
    "CurvaddError",
    "DEFAULT_FIELD_CAP",
    "DEFAULT_ORACLE_CAP",
    "FqContext",
    "FqElement",
    "HWWindow",
    "INFINITY",
    "Inconsistent",
    "LinearizedMap",
    "ParseError",
    "PointSet",
    "QQ",
    "RationalFunction",
    "SparsePoly",
    "Subspace",
    "UniPoly",
    "affine_points",
    "analyze",
    "axis_parallel_lines",
    "bipoly_eval",
    "check_x_or_inverse",
    "conic_bound",
    "conic_claimed",
    "conjectural_by_count",
    "decide_by_exhaustion",
    "decide_by_hyperplanes",
    "degree_valuation",
    "elliptic_bound",
    "elliptic_claimed",
    "embed",
    "enumerate_all_maps",
    "enumerate_hyperplanes",
    "eval_map",
    "ext2_family_check",
    "field_cap",
    "field_domain",
    "h_additive",
    "hasse_weil_window",
    "hyperplane_functionals",
    "in_valuation_ring",
    "is_prime",
    "load_curve_file",
    "make_context",
    "oracle_cap",
    "padic_valuation",
    "random_rational_function",
    "random_unipoly",
    "parse_bipoly",
    "parse_curve_file",
    "parse_poly",
    "partial_derivative",
    "points_at_infinity_count",
    "singular_points",
    "slice_degree_profile",
    "slice_surface",
    "trace_functional",
    "trivial_valuation",
    "verify_valuation_axioms",
    "verify_witness",
    "zero_forcing_by_count",
    "zero_forcing_inequality",
]
