"""Wulff shapes of planar integrands, their duals, and the max/min verifiers.

The Wulff shape of ``gamma`` is the intersection of the half-planes
``{x : x . u(theta) <= gamma(theta)}``.  It is sampled on a uniform set of
``K`` directions; the non-smooth angles reported by the integrand (polygon
edge normals, sample-table nodes, crossings of max/min operands) are added
so that piecewise-smooth integrands are not rounded off at their corners.

The dual Wulff shape is formed on the sphere: lift to the upper hemisphere,
take the spherical polar set, project back.  In the plane this is the
reflected polar body ``-P°``, whose boundary is the inverted graph.
"""
from dataclasses import dataclass

import numpy as np

from . import euclid_convex as ec
from .exceptions import HypothesisNotMet, NotConvexIntegrand
from .integrand import (
    TWO_PI,
    inverted_graph_points,
    is_convex_integrand,
    pointwise_max,
    pointwise_min,
    uniform_angles,
)
from .report import VerificationReport
from .sphere_core import NORTH, central_project, central_unproject, spherical_blowup
from .spherical_convex import spherical_polar_vertices

MIN_DIRECTIONS = 16
HYPOTHESIS_TOL = 1e-6


def tol_geom(K):
    """Discretization tolerance ``10 (1 - cos(pi/K))`` used by every theorem check."""
    return 10.0 * (1.0 - np.cos(np.pi / K))


@dataclass(frozen=True)
class WulffResult:
    shape: ec.ConvexPolygon
    directions_used: int
    gamma_id: str

    def to_dict(self):
        out = self.shape.to_dict()
        out["directions_used"] = self.directions_used
        out["gamma"] = self.gamma_id
        return out


def wulff_directions(g, K, refine_kinks=True):
    """Sorted sampling angles: ``K`` uniform ones plus the integrand's kinks."""
    if K < MIN_DIRECTIONS:
        raise ValueError(f"need at least {MIN_DIRECTIONS} directions, got {K}")
    theta = uniform_angles(K)
    if refine_kinks:
        theta = np.unique(np.concatenate([theta, np.mod(g.kink_angles(), TWO_PI)]))
    return theta


def _unit(theta):
    return np.column_stack([np.cos(theta), np.sin(theta)])


def wulff_direct(g, K=720, refine_kinks=True):
    theta = wulff_directions(g, K, refine_kinks)
    shape = ec.halfplane_intersection(_unit(theta), g(theta))
    return WulffResult(shape, len(theta), g.describe())


def wulff_spherical(g, K=720, refine_kinks=True):
    """Wulff shape through the sphere.

    The graph points are lifted to the upper hemisphere and blown up; the
    spherical polar set of the blown-up points is projected back to the
    plane.
    """
    theta = wulff_directions(g, K, refine_kinks)
    graph = g(theta)[:, None] * _unit(theta)
    blown = spherical_blowup(central_unproject(graph))
    vertices = spherical_polar_vertices(blown, NORTH)
    return WulffResult(ec.convex_hull(central_project(vertices)), len(theta), g.describe())


def dual_polygon(polygon):
    """Dual Wulff shape of a polygon computed on the sphere (lift, polar, project)."""
    vertices = spherical_polar_vertices(central_unproject(polygon.vertices), NORTH)
    return ec.convex_hull(central_project(vertices))


def dual_wulff(g, K=720, refine_kinks=True):
    w = wulff_direct(g, K, refine_kinks)
    return WulffResult(dual_polygon(w.shape), w.directions_used, f"dual of {w.gamma_id}")


def _require_convex(g, K, name):
    res = is_convex_integrand(g, max(K, 64), HYPOTHESIS_TOL)
    if not res.is_convex:
        raise NotConvexIntegrand(
            f"{name} is not a convex integrand: inverted graph point at theta={res.witness:.6f} "
            f"lies {res.worst_violation:.3e} inside the hull"
        )


def verify_dual_boundary(g, K=720, tol=None):
    """Distance from the inverted graph to the boundary of the dual Wulff shape."""
    _require_convex(g, K, "gamma")
    dual = dual_wulff(g, K).shape
    dist = dual.boundary_distance(inverted_graph_points(g, K))
    tol = tol_geom(K) if tol is None else tol
    return VerificationReport(
        name="dual-boundary",
        inputs=f"gamma={g.describe()}, K={K}",
        measured=[("max_distance_to_dual_boundary", float(np.max(dist)))],
        tolerance=tol,
        details={"K": K},
    )


def _pair_shapes(g1, g2, K):
    _require_convex(g1, K, "gamma1")
    _require_convex(g2, K, "gamma2")
    w1 = wulff_direct(g1, K).shape
    w2 = wulff_direct(g2, K).shape
    wmax = wulff_direct(pointwise_max(g1, g2), K).shape
    wmin = wulff_direct(pointwise_min(g1, g2), K).shape
    return w1, w2, wmax, wmin


def verify_theorem1(g1, g2, K=720, tol=None):
    """Compare W(max) with conv(W1 ∪ W2) and W(min) with W1 ∩ W2.

    Raises
    ------
    NotConvexIntegrand
        If either input fails the convex-integrand test at resolution ``K``.
    """
    w1, w2, wmax, wmin = _pair_shapes(g1, g2, K)
    d_max = ec.hausdorff_distance(wmax, ec.hull_of_union(w1, w2))
    d_min = ec.hausdorff_distance(wmin, ec.intersect(w1, w2))
    scale = max(w1.diameter(), w2.diameter())
    tol = tol_geom(K) if tol is None else tol
    return VerificationReport(
        name="theorem1",
        inputs=f"gamma1={g1.describe()}, gamma2={g2.describe()}, K={K}",
        measured=[("hausdorff_max_vs_hull_of_union", d_max), ("hausdorff_min_vs_intersection", d_min)],
        tolerance=tol * scale,
        details={"K": K, "diameter": scale},
    )


def verify_section4(g1, g2, K=720, tol=None):
    """Check W(max) = D(DW1 ∩ DW2) and W(min) = D(conv(DW1 ∪ DW2)).

    The inclusion of W(min) in the dual of W(max) is measured as well and
    reported under ``details``; it does not enter the pass flag.
    """
    w1, w2, wmax, wmin = _pair_shapes(g1, g2, K)
    dw1 = dual_wulff(g1, K).shape
    dw2 = dual_wulff(g2, K).shape
    rhs_max = dual_polygon(ec.intersect(dw1, dw2))
    rhs_min = dual_polygon(ec.hull_of_union(dw1, dw2))
    d_max = ec.hausdorff_distance(wmax, rhs_max)
    d_min = ec.hausdorff_distance(wmin, rhs_min)
    scale = max(w1.diameter(), w2.diameter())
    tol = tol_geom(K) if tol is None else tol

    excess_dual = float(np.max(dual_polygon(wmax).distance(wmin.vertices)))
    excess_max = float(np.max(wmax.distance(wmin.vertices)))
    details = {
        "K": K,
        "diameter": scale,
        "inclusion_min_in_dual_of_max": {
            "violation": excess_dual,
            "tolerance": HYPOTHESIS_TOL,
            "holds": excess_dual <= HYPOTHESIS_TOL,
        },
        "inclusion_min_in_max": {
            "violation": excess_max,
            "tolerance": HYPOTHESIS_TOL,
            "holds": excess_max <= HYPOTHESIS_TOL,
        },
    }
    return VerificationReport(
        name="section4",
        inputs=f"gamma1={g1.describe()}, gamma2={g2.describe()}, K={K}",
        measured=[("hausdorff_max_vs_dual_of_dual_intersection", d_max),
                  ("hausdorff_min_vs_dual_of_dual_hull", d_min)],
        tolerance=tol * scale,
        details=details,
    )


def verify_corollary(g1, g2, K=720, tol=None):
    """For a dual pair (W2 = D W1), check that W(max) is the dual of W(min).

    Raises
    ------
    HypothesisNotMet
        If ``dual_wulff(g1)`` and ``wulff_direct(g2)`` are not within tolerance.
    """
    dw1 = dual_wulff(g1, K).shape
    w1 = wulff_direct(g1, K).shape
    w2 = wulff_direct(g2, K).shape
    scale = max(w1.diameter(), w2.diameter())
    tol = (tol_geom(K) if tol is None else tol) * scale
    gap = ec.hausdorff_distance(dw1, w2)
    if gap > tol:
        raise HypothesisNotMet(f"gamma2 is not dual to gamma1: Hausdorff gap {gap:.3e} > {tol:.3e}")
    wmax = wulff_direct(pointwise_max(g1, g2), K).shape
    wmin = wulff_direct(pointwise_min(g1, g2), K).shape
    d = ec.hausdorff_distance(wmax, dual_polygon(wmin))
    return VerificationReport(
        name="corollary",
        inputs=f"gamma1={g1.describe()}, gamma2={g2.describe()}, K={K}",
        measured=[("hausdorff_max_vs_dual_of_min", d)],
        tolerance=tol,
        details={"K": K, "diameter": scale, "duality_gap": gap},
    )


def verify_convexity(g, K=720, tol=None):
    if tol is None:
        tol = 1e-7 * float(np.max(np.linalg.norm(inverted_graph_points(g, K), axis=1)))
    res = is_convex_integrand(g, K, tol)
    return VerificationReport(
        name="convexity",
        inputs=f"gamma={g.describe()}, K={K}",
        measured=[("worst_violation", res.worst_violation)],
        tolerance=tol,
        details={"K": K, "witness_angle": res.witness},
    )
