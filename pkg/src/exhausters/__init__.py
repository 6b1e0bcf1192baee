"""Support-curve calculus for upper exhausters of planar positively
homogeneous functions: exact theta-rho curves, lower envelopes, and
certificate-producing reduction and minimality checks."""

from .envelope import (
    DEFAULT_TOL,
    Envelope,
    curve_difference_max,
    curve_le_regions,
    difference_max,
    dominance_arcs,
    lower_envelope,
    sinusoid_intersections,
)
from .formats import (
    DocumentError,
    emit_curves,
    parse_exhauster,
    serialize_exhauster,
)
from .geometry import (
    ConvexBody,
    Direction,
    Exhauster,
    Point2,
    UnsupportedKindError,
    ValidationError,
    canonicalize_polygon,
    contains,
    intersect_polygons,
    support_value,
)
from .reduction import (
    DEFAULT_DELTA_MIN,
    CannotDiscardLastBody,
    DiscardCertificate,
    MinimalityReport,
    RemovalRecord,
    RetentionCertificate,
    SubsetPresentError,
    WitnessInterval,
    check_minimal,
    check_strict_dominance,
    evaluate_h,
    find_dominating_subset,
    is_discardable,
    partition_certificate,
    reduce,
    retention_certificate,
)
from .support import (
    Arc,
    CurvePiece,
    Sinusoid,
    SupportCurve,
    eval_curve,
    sample_curve,
    support_curve,
    vertex_sinusoid,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "CannotDiscardLastBody",
    "ConvexBody",
    "CurvePiece",
    "DEFAULT_DELTA_MIN",
    "DEFAULT_TOL",
    "Direction",
    "DiscardCertificate",
    "DocumentError",
    "Envelope",
    "Exhauster",
    "MinimalityReport",
    "Point2",
    "RemovalRecord",
    "RetentionCertificate",
    "Sinusoid",
    "SubsetPresentError",
    "SupportCurve",
    "UnsupportedKindError",
    "ValidationError",
    "WitnessInterval",
    "canonicalize_polygon",
    "check_minimal",
    "check_strict_dominance",
    "contains",
    "curve_difference_max",
    "curve_le_regions",
    "difference_max",
    "dominance_arcs",
    "emit_curves",
    "eval_curve",
    "evaluate_h",
    "find_dominating_subset",
    "intersect_polygons",
    "is_discardable",
    "lower_envelope",
    "parse_exhauster",
    "partition_certificate",
    "reduce",
    "retention_certificate",
    "sample_curve",
    "serialize_exhauster",
    "sinusoid_intersections",
    "support_curve",
    "support_value",
    "vertex_sinusoid",
]
