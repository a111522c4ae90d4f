"""Spherical convexity for finite point sets on S^2.

A finite set ``W`` generates the convex cone ``cone(W)`` in R^3.  Its
spherical convex hull is ``cone(W)`` intersected with the sphere and its
spherical polar set ``W°`` is the dual cone ``{Q : P.Q >= 0 for P in W}``
on the sphere.  Hulls and polars of cones whose trace fits inside an open
hemisphere are computed in a central-projection chart, where spherical
convexity becomes planar convexity.
"""
from collections import namedtuple
from dataclasses import dataclass

import numpy as np
from scipy.optimize import nnls

from . import euclid_convex as ec
from .exceptions import DegenerateInput, GeometryError, Inconclusive, NotHemispherical, Unbounded
from .report import VerificationReport
from .sphere_core import EPS_ZERO, chart_frame, chart_project, chart_unproject, sphere_points

BOUNDARY_BAND = 1e-9
HEMISPHERE_MARGIN = 1e-9


class FiniteSphereSet:
    """Nonempty finite subset of S^2; near-duplicates (1e-12) are merged."""

    def __init__(self, points):
        P = np.atleast_2d(sphere_points(points))
        if P.ndim != 2 or len(P) == 0:
            raise GeometryError("a finite sphere set needs at least one point")
        kept = []
        for p in P:
            if not any(np.linalg.norm(p - q) <= 1e-12 for q in kept):
                kept.append(p)
        self.points = np.array(kept)
        self.points.flags.writeable = False

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"FiniteSphereSet(k={len(self)})"

    def union(self, other):
        return FiniteSphereSet(np.vstack([self.points, other.points]))


def _as_set(W):
    return W if isinstance(W, FiniteSphereSet) else FiniteSphereSet(W)


@dataclass(frozen=True)
class Hemisphere:
    """Closed hemisphere ``H(center) = {Q : center . Q >= 0}``."""

    center: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "center", sphere_points(self.center))

    def contains(self, Q):
        return in_hemisphere(self, Q)


def in_hemisphere(h, Q):
    return np.asarray(Q, dtype=float) @ h.center >= -EPS_ZERO


def polar_membership(W, Q):
    """Whether ``Q`` lies in every hemisphere ``H(P)``, ``P`` in ``W``."""
    W = _as_set(W)
    return np.all(np.asarray(Q, dtype=float) @ W.points.T >= -EPS_ZERO, axis=-1)


HemisphericalResult = namedtuple("HemisphericalResult", ["is_hemispherical", "witness", "margin"])


def _nearest_hull_point(P, maxiter=10_000):
    """Point of conv(P) closest to the origin (least squares on the simplex).

    Minimizes ``|P^T l|^2 + (sum l - 1)^2`` over ``l >= 0``; rescaling the
    minimizer onto the simplex gives the exact nearest point.
    """
    A = np.vstack([P.T, np.ones(len(P))])
    b = np.array([0.0, 0.0, 0.0, 1.0])
    lam, _ = nnls(A, b, maxiter=maxiter)
    lam = lam / lam.sum()
    return P.T @ lam


def is_hemispherical(W):
    """Decide whether some closed hemisphere misses ``W`` entirely.

    By Gordan's alternative, either a direction ``v`` with ``P.v < 0`` for
    all ``P`` exists, or the origin lies in conv(W).  The distance from the
    origin to conv(W) is the best achievable margin ``min_P (-P.v)``.

    Returns
    -------
    HemisphericalResult
        ``(flag, witness, margin)``; ``witness`` is the unit direction ``v``
        (``None`` when not hemispherical).

    Raises
    ------
    Inconclusive
        If the margin is positive but not above ``1e-9``.
    """
    W = _as_set(W)
    z = _nearest_hull_point(W.points)
    d = float(np.linalg.norm(z))
    if d > HEMISPHERE_MARGIN:
        v = -z / d
        return HemisphericalResult(True, v, float(np.min(-W.points @ v)))
    if d <= EPS_ZERO:
        return HemisphericalResult(False, None, -d)
    raise Inconclusive(f"hemisphericity margin {d:.3e} is inside the dead band")


def _require_hemispherical(W):
    try:
        res = is_hemispherical(W)
    except Inconclusive as exc:
        raise NotHemispherical(str(exc)) from exc
    if not res.is_hemispherical:
        raise NotHemispherical("set is not contained in any open hemisphere")
    return res


class _Cone:
    """Extreme rays and facet normals of cone(W) for a hemispherical ``W``."""

    def __init__(self, W):
        W = _as_set(W)
        res = _require_hemispherical(W)
        self.generators = W.points
        self.inner = -res.witness  # P . inner >= margin > 0 for every generator
        self.margin = res.margin
        x = chart_project(W.points, self.inner)
        try:
            hull = ec.convex_hull(x)
            self.dim = 3
            self.rays = chart_unproject(hull.vertices, self.inner)
        except DegenerateInput:
            spread = np.max(np.linalg.norm(x - x[0], axis=1)) if len(x) > 1 else 0.0
            if spread <= 1e-12:
                self.dim = 1
                self.rays = W.points[:1].copy()
            else:
                self.dim = 2
                axis = x[int(np.argmax(np.linalg.norm(x - x[0], axis=1)))] - x[0]
                s = x @ axis
                ends = x[[int(np.argmin(s)), int(np.argmax(s))]]
                self.rays = chart_unproject(ends, self.inner)
        self.facets = self._facets()

    def _facets(self):
        if self.dim == 1:
            return np.empty((0, 3))
        r = self.rays
        pairs = list(zip(range(len(r)), list(range(1, len(r))) + [0]))
        if self.dim == 2:
            pairs = pairs[:1]
        normals = np.array([np.cross(r[a], r[b]) for a, b in pairs])
        return normals / np.linalg.norm(normals, axis=1, keepdims=True)

    def _pairs(self):
        n = len(self.rays)
        if self.dim == 1:
            return []
        if self.dim == 2:
            return [(0, 1)]
        return [(i, (i + 1) % n) for i in range(n)]

    def angular_distance(self, Q):
        """Signed angular distance from ``Q`` to cone(W) on the sphere.

        Negative values are lower bounds (in magnitude) on the distance
        from an interior point to the boundary.
        """
        Q = np.atleast_2d(np.asarray(Q, dtype=float))
        out = self._outside_distance(Q)
        if self.dim == 3:
            s = Q @ self.facets.T
            inside = np.all(s >= 0.0, axis=1) & (Q @ self.inner > 0.0)
            out[inside] = -np.arcsin(np.clip(s[inside].min(axis=1), 0.0, 1.0))
        return out

    def _outside_distance(self, Q):
        # angle between Q and its metric projection onto the cone, taken over
        # the rays and the 2D faces; atan2 keeps tiny angles accurate
        dots = Q @ self.rays.T
        resid = np.linalg.norm(Q[:, None, :] - dots[..., None] * self.rays[None], axis=-1)
        angles = np.where(dots > 0.0, np.arctan2(resid, dots), np.inf)
        dist = np.min(angles, axis=1)
        for a, b in self._pairs():
            G = self.rays[[a, b]]
            coef = np.linalg.solve(G @ G.T, G @ Q.T)
            proj = coef.T @ G
            ok = np.all(coef > 0.0, axis=0)
            face = np.arctan2(np.linalg.norm(Q - proj, axis=1), np.linalg.norm(proj, axis=1))
            dist = np.where(ok, np.minimum(dist, face), dist)
        # zero projection: the apex is closest, and the nearest generator decides
        apex = ~np.isfinite(dist)
        if np.any(apex):
            dist[apex] = np.arccos(np.clip(np.max(Q[apex] @ self.generators.T, axis=1), -1.0, 1.0))
        return dist


def s_conv_distance(W, Q):
    """Signed angular distance from ``Q`` to s-conv(W) (negative inside)."""
    return _Cone(W).angular_distance(Q)


def s_conv_membership(W, Q, tol=1e-12):
    """Whether ``Q`` is within angular distance ``tol`` of the spherical hull of ``W``."""
    d = s_conv_distance(W, Q) <= tol
    return bool(d[0]) if np.ndim(Q) == 1 else d


def spherical_polar_vertices(P, center):
    """Vertices of the spherical polygon ``∩ H(P_i)`` computed in the chart at ``center``.

    ``center`` must satisfy ``P_i . center > 0`` for all ``i`` and the
    polygon must lie in the open hemisphere around ``center``; the chart
    then turns each hemisphere into a half-plane with positive offset.
    """
    P = np.atleast_2d(np.asarray(P, dtype=float))
    local = P @ chart_frame(center).T
    a, b = local[:, :2], local[:, 2]
    if np.any(b <= 0.0):
        raise GeometryError("chart centre is not interior to every hemisphere")
    norms = np.linalg.norm(a, axis=1)
    keep = norms > EPS_ZERO
    poly = ec.halfplane_intersection(-a[keep], b[keep])
    return chart_unproject(poly.vertices, center)


def polar_generators(W):
    """A finite generator set whose spherical hull is ``W°``.

    For a full-dimensional cone the generators are the vertices of the
    spherical polygon ``W°``.  Lower-dimensional cones have polars that
    contain a great circle arc through antipodes; their generators then
    include the antipodal pair spanning that line.
    """
    cone = _Cone(W)
    if cone.dim == 3:
        # a point interior to both cone(W) and its dual cone
        mid = cone.rays.sum(axis=0)
        mid /= np.linalg.norm(mid)
        center = cone.inner + 0.5 * cone.margin * mid
        center /= np.linalg.norm(center)
        try:
            return FiniteSphereSet(spherical_polar_vertices(cone.generators, center))
        except Unbounded as exc:
            raise GeometryError("polar polygon does not fit the projection chart") from exc
    if cone.dim == 2:
        ga, gb = cone.rays
        m = np.cross(ga, gb)
        m /= np.linalg.norm(m)
        ua = np.cross(m, ga)
        ua = ua if ua @ gb > 0 else -ua
        ub = np.cross(m, gb)
        ub = ub if ub @ ga > 0 else -ub
        return FiniteSphereSet(np.vstack([m, -m, ua, ub]))
    g = cone.rays[0]
    e = chart_frame(g)
    return FiniteSphereSet(np.vstack([g, e[0], -e[0], e[1], -e[1]]))


def random_sphere_points(n, rng):
    return sphere_points(rng.normal(size=(n, 3)))


def random_cap_points(n, radius, rng, center=None):
    """``n`` points uniform by area in the spherical cap of angular ``radius``."""
    if center is None:
        center = random_sphere_points(1, rng)[0]
    center = sphere_points(center)
    z = rng.uniform(np.cos(radius), 1.0, size=n)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
    r = np.sqrt(1.0 - z * z)
    local = np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    return local @ chart_frame(center)


def verify_maehara(W, trials=10_000, seed=0):
    """Sampled check that (s-conv W)° equals the intersection of the hemispheres H(P_i).

    The left side is decided geometrically: ``Q`` is in the polar of the
    hull iff the hull keeps angular distance at least pi/2 from ``-Q``.
    Samples within ``1e-9`` of either boundary are excluded.
    """
    W = _as_set(W)
    cone = _Cone(W)
    Q = random_sphere_points(trials, np.random.default_rng(seed))
    rhs_margin = np.min(Q @ W.points.T, axis=1)
    rhs = rhs_margin >= 0.0
    # cos of the distance from -Q to the hull = max_{X in hull} (-Q . X)
    lhs_margin = -np.cos(cone.angular_distance(-Q))
    lhs = lhs_margin >= 0.0
    counted = (np.abs(rhs_margin) > BOUNDARY_BAND) & (np.abs(lhs_margin) > BOUNDARY_BAND)
    mismatches = int(np.sum(counted & (lhs != rhs)))
    worst = float(np.min(np.abs(rhs_margin[counted]))) if counted.any() else None
    return VerificationReport(
        name="maehara",
        inputs=f"{len(W)} generators",
        measured=[("mismatches", mismatches)],
        tolerance=0,
        seed=seed,
        trials=trials,
        mismatches=mismatches,
        worst_margin=worst,
        details={"excluded": int(trials - counted.sum()), "polar_members": int(np.sum(rhs & counted))},
    )


def verify_double_polar(W, trials=10_000, seed=0):
    """Sampled check that s-conv(W) equals W°° for a hemispherical finite ``W``.

    ``W°°`` membership is tested against an explicit generator set of ``W°``
    from :func:`polar_generators`; hull membership uses the facet
    description of cone(W).
    """
    W = _as_set(W)
    cone = _Cone(W)
    Y = polar_generators(W).points
    Q = random_sphere_points(trials, np.random.default_rng(seed))
    rhs_margin = np.min(Q @ Y.T, axis=1)
    rhs = rhs_margin >= 0.0
    lhs_dist = cone.angular_distance(Q)
    lhs = lhs_dist <= 0.0
    counted = (np.abs(rhs_margin) > BOUNDARY_BAND) & (np.abs(lhs_dist) > BOUNDARY_BAND)
    mismatches = int(np.sum(counted & (lhs != rhs)))
    worst = float(np.min(np.abs(rhs_margin[counted]))) if counted.any() else None
    # W is contained in W°° (every generator passes the dual test)
    generator_violations = int(np.sum(np.min(W.points @ Y.T, axis=1) < -1e-12))
    return VerificationReport(
        name="double-polar",
        inputs=f"{len(W)} generators, cone dimension {cone.dim}",
        measured=[("mismatches", mismatches), ("generators_outside_double_polar", generator_violations)],
        tolerance=0,
        seed=seed,
        trials=trials,
        mismatches=mismatches,
        worst_margin=worst,
        details={"excluded": int(trials - counted.sum()), "hull_members": int(np.sum(lhs & counted))},
    )
