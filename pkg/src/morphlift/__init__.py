"""morphlift: exact complete lifts of Euclidean maps and harmonic-morphism
certificates."""

from .analysis import (
    CheckReport,
    Violation,
    hessian_conditions,
    hwc_certificate,
    is_harmonic,
    is_harmonic_morphism,
    is_holomorphic,
    is_orthogonal_multiplication,
)
from .calculus import (
    PolyMatrix,
    antiholomorphic_jacobian,
    complex_gradient,
    gram,
    hessian,
    jacobian,
    laplacian,
    laplacian_map,
    wirtinger_jacobian,
)
from .exact import (
    DimensionMismatch,
    ExactMatrix,
    GaussianRational,
    bilinear_dot,
    span_contains,
)
from .expr import EvalDomainError, Expr, NotPolynomial, SmoothMap
from .kaehler import (
    INCONCLUSIVE,
    NOT_KAEHLER,
    KaehlerReport,
    gradient_at,
    search_points,
    span_report,
)
from .lift import (
    LiftSplit,
    MixedPartialObstruction,
    NotPartialLinear,
    anti_lift,
    block_jacobian_check,
    complete_lift_complex,
    complete_lift_real,
    quadratic_complete_lift,
)
from .mapfile import MapSyntaxError, parse_map, parse_poly, render_map_source
from .maps import (
    ComplexPolyMap,
    QuadraticMap,
    RealPolyMap,
    ShapeError,
    complexify,
    compose,
    from_quadratic,
    real_identification,
    to_quadratic,
)
from .numeric import (
    InternalConsistencyError,
    ResidualReport,
    SamplingError,
    numeric_check,
    numeric_complete_lift,
    sample_points,
)
from .poly import ConsistencyError, MultiPoly, render

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "Violation", "hessian_conditions", "hwc_certificate",
    "is_harmonic", "is_harmonic_morphism", "is_holomorphic",
    "is_orthogonal_multiplication",
    "PolyMatrix", "antiholomorphic_jacobian", "complex_gradient", "gram",
    "hessian", "jacobian", "laplacian", "laplacian_map", "wirtinger_jacobian",
    "DimensionMismatch", "ExactMatrix", "GaussianRational", "bilinear_dot",
    "span_contains",
    "EvalDomainError", "Expr", "NotPolynomial", "SmoothMap",
    "INCONCLUSIVE", "NOT_KAEHLER", "KaehlerReport", "gradient_at",
    "search_points", "span_report",
    "LiftSplit", "MixedPartialObstruction", "NotPartialLinear", "anti_lift",
    "block_jacobian_check", "complete_lift_complex", "complete_lift_real",
    "quadratic_complete_lift",
    "MapSyntaxError", "parse_map", "parse_poly", "render_map_source",
    "ComplexPolyMap", "QuadraticMap", "RealPolyMap", "ShapeError",
    "complexify", "compose", "from_quadratic", "real_identification",
    "to_quadratic",
    "InternalConsistencyError", "ResidualReport", "SamplingError",
    "numeric_check", "numeric_complete_lift", "sample_points",
    "ConsistencyError", "MultiPoly", "render",
]
