"""Planar Wulff shapes, spherical polar duality, and max/min integrand checks."""
from .euclid_convex import (
    ConvexPolygon,
    HalfPlane,
    contains,
    convex_hull,
    halfplane_intersection,
    hausdorff_distance,
    hull_of_union,
    intersect,
    polar_dual,
)
from .integrand import (
    Constant,
    Expression,
    Integrand,
    Max,
    Min,
    Samples,
    SupportPolygon,
    graph_points,
    inverted_graph_points,
    is_convex_integrand,
    pointwise_max,
    pointwise_min,
)
from .dsl import parse_integrand_spec
from .report import VerificationReport
from .wulff import (
    WulffResult,
    dual_polygon,
    dual_wulff,
    tol_geom,
    verify_corollary,
    verify_dual_boundary,
    verify_section4,
    verify_theorem1,
    wulff_direct,
    wulff_spherical,
)
from .estimator import WulffShape

__version__ = "0.1.0"

__all__ = [
    "ConvexPolygon", "HalfPlane", "contains", "convex_hull", "halfplane_intersection",
    "hausdorff_distance", "hull_of_union", "intersect", "polar_dual",
    "Constant", "Expression", "Integrand", "Max", "Min", "Samples", "SupportPolygon",
    "graph_points", "inverted_graph_points", "is_convex_integrand", "pointwise_max", "pointwise_min",
    "parse_integrand_spec", "VerificationReport",
    "WulffResult", "dual_polygon", "dual_wulff", "tol_geom", "verify_corollary",
    "verify_dual_boundary", "verify_section4", "verify_theorem1", "wulff_direct", "wulff_spherical",
    "WulffShape",
]
