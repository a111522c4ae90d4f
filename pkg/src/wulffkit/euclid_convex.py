"""Planar convex polygons: hulls, half-plane intersection, polar duality.

Polygons are stored as counterclockwise vertex arrays only; edge normals and
offsets are derived on demand.  All predicates work in double precision with
the absolute collinearity tolerance ``EPS_COL`` on cross products, which is
appropriate for unit-scale data.
"""
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist

from .exceptions import (
    DegenerateInput,
    EmptyIntersection,
    GeometryError,
    OriginNotInterior,
    Unbounded,
)
from .sphere_core import plane_points

EPS_COL = 1e-12


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _turns(v):
    """Cross product at every vertex of a closed polygon (prev, cur, next)."""
    prev = np.roll(v, 1, axis=0)
    nxt = np.roll(v, -1, axis=0)
    e1 = v - prev
    e2 = nxt - v
    return e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]


class ConvexPolygon:
    """A strictly convex polygon with counterclockwise vertices.

    Parameters
    ----------
    vertices : array-like of shape (n, 2)
        Counterclockwise vertex list, ``n >= 3``, with every turn strictly
        positive (cross product above ``EPS_COL``).
    """

    __slots__ = ("_vertices",)

    def __init__(self, vertices):
        v = np.array(plane_points(vertices), dtype=float)
        if v.ndim != 2 or len(v) < 3:
            raise GeometryError("a convex polygon needs at least 3 vertices")
        if np.any(_turns(v) <= EPS_COL):
            raise GeometryError("vertices are not a strictly convex counterclockwise sequence")
        v.flags.writeable = False
        self._vertices = v

    @property
    def vertices(self):
        return self._vertices

    def __len__(self):
        return len(self._vertices)

    def __repr__(self):
        return f"ConvexPolygon(n={len(self)}, area={self.area():.6g})"

    def edges(self):
        """Unit outward normals and offsets, edge ``i`` running from vertex ``i`` to ``i+1``."""
        v = self._vertices
        d = np.roll(v, -1, axis=0) - v
        normals = np.column_stack([d[:, 1], -d[:, 0]])
        normals /= np.linalg.norm(normals, axis=1, keepdims=True)
        offsets = np.einsum("ij,ij->i", normals, v)
        return normals, offsets

    def halfplanes(self):
        return [HalfPlane(n, c) for n, c in zip(*self.edges())]

    def area(self):
        x, y = self._vertices.T
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    def diameter(self):
        return float(pdist(self._vertices).max())

    def support(self, direction):
        """Support function ``max_v v . u`` for one or many directions ``u``."""
        u = np.asarray(direction, dtype=float)
        return np.max(u @ self._vertices.T, axis=-1)

    def interior_distance(self, points):
        """Signed distance to the boundary, positive inside and negative outside.

        Outside the polygon the value is the largest edge-line violation,
        which is a lower bound on the true Euclidean distance.
        """
        p = plane_points(points)
        normals, offsets = self.edges()
        return np.min(offsets - p @ normals.T, axis=-1)

    def boundary_distance(self, points):
        """Unsigned Euclidean distance from each point to the polygon boundary."""
        p = np.atleast_2d(plane_points(points))
        a = self._vertices
        b = np.roll(a, -1, axis=0)
        ab = b - a
        ap = p[:, None, :] - a[None, :, :]
        t = np.clip(np.einsum("pki,ki->pk", ap, ab) / np.einsum("ki,ki->k", ab, ab), 0.0, 1.0)
        closest = a[None] + t[..., None] * ab[None]
        dist = np.linalg.norm(p[:, None, :] - closest, axis=-1).min(axis=1)
        return dist if np.ndim(points) > 1 else dist[0]

    def distance(self, points):
        """Euclidean distance from each point to the polygon (zero inside)."""
        inside = self.interior_distance(points) >= 0.0
        return np.where(inside, 0.0, self.boundary_distance(points))

    def contains(self, points, tol=0.0):
        return contains(self, points, tol)

    def scaled(self, factor):
        if factor <= 0:
            raise GeometryError("scale factor must be positive")
        return ConvexPolygon(self._vertices * factor)

    def reflected(self):
        """Point reflection through the origin, ``P -> -P``."""
        return ConvexPolygon(-self._vertices)

    def to_dict(self):
        return {"vertices": self._vertices.tolist()}

    @classmethod
    def from_dict(cls, data):
        return cls(data["vertices"])


@dataclass(frozen=True)
class HalfPlane:
    """The closed half-plane ``{x : x . normal <= offset}``."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=float)
        length = np.linalg.norm(n)
        if length == 0.0 or not np.isfinite(length):
            raise GeometryError("half-plane normal must be a nonzero finite vector")
        # normalize so that the unit-normal invariant always holds
        object.__setattr__(self, "normal", n / length)
        object.__setattr__(self, "offset", float(self.offset) / length)

    def contains(self, point, tol=0.0):
        return np.asarray(point, dtype=float) @ self.normal <= self.offset + tol


def _merge_collinear(cycle):
    """Drop vertices of a counterclockwise cycle whose turn is at most ``EPS_COL``."""
    out = []
    for p in cycle:
        while len(out) >= 2 and _cross(out[-2], out[-1], p) <= EPS_COL:
            out.pop()
        out.append(p)
    while len(out) >= 3:
        if _cross(out[-2], out[-1], out[0]) <= EPS_COL:
            out.pop()
        elif _cross(out[-1], out[0], out[1]) <= EPS_COL:
            out.pop(0)
        else:
            break
    return out


def convex_hull(points):
    """Counterclockwise convex hull by Andrew's monotone chain.

    Near-collinear boundary points (turn cross product ``<= EPS_COL``) and
    duplicates are dropped.

    Raises
    ------
    DegenerateInput
        If fewer than three non-collinear points remain.
    """
    pts = np.atleast_2d(plane_points(points))
    if len(pts) < 3:
        raise DegenerateInput("need at least three points for a hull")
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = [tuple(p) for p in pts[order]]

    # exact-orientation chains; tolerance is applied afterwards, in cyclic
    # order, because noisy near-collinear points need not be sorted along
    # their common line
    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = _merge_collinear(lower[:-1] + upper[:-1])
    if len(hull) < 3:
        raise DegenerateInput("points are (numerically) collinear")
    # canonical start: lexicographically smallest vertex
    start = min(range(len(hull)), key=lambda i: hull[i])
    return ConvexPolygon(np.array(hull[start:] + hull[:start]))


def _as_normals_offsets(planes, offsets):
    if offsets is None:
        normals = np.array([h.normal for h in planes], dtype=float)
        offsets = np.array([h.offset for h in planes], dtype=float)
    else:
        normals = np.asarray(planes, dtype=float)
        offsets = np.asarray(offsets, dtype=float)
        lengths = np.linalg.norm(normals, axis=1)
        normals = normals / lengths[:, None]
        offsets = offsets / lengths
    return normals, offsets


def halfplane_intersection(planes, offsets=None):
    """Bounded intersection of half-planes ``x . n_i <= c_i`` with all ``c_i > 0``.

    Accepts either a sequence of :class:`HalfPlane` or an ``(m, 2)`` normal
    array together with an ``(m,)`` offset array.  Each plane is dualized to
    the point ``n_i / c_i``; the hull edges of the dual points are the
    vertices of the intersection.

    Raises
    ------
    Unbounded
        If the normals do not positively span the plane.
    """
    normals, c = _as_normals_offsets(planes, offsets)
    if len(c) < 3:
        raise Unbounded("at least three half-planes are needed for a bounded region")
    if np.any(c <= 0.0):
        raise GeometryError("half-plane offsets must be strictly positive")
    try:
        dual = convex_hull(normals / c[:, None])
    except DegenerateInput as exc:
        raise Unbounded("half-plane normals do not positively span the plane") from exc
    _, dual_offsets = dual.edges()
    if np.any(dual_offsets <= EPS_COL):
        raise Unbounded("half-plane normals do not positively span the plane")
    q = dual.vertices
    q_next = np.roll(q, -1, axis=0)
    det = q[:, 0] * q_next[:, 1] - q[:, 1] * q_next[:, 0]
    # solve [q_i; q_{i+1}] x = [1, 1] by Cramer's rule
    x = (q_next[:, 1] - q[:, 1]) / det
    y = (q[:, 0] - q_next[:, 0]) / det
    return convex_hull(np.column_stack([x, y]))


def polar_dual(polygon):
    """Polar body ``{y : y . x <= 1 for all x in P}``; needs the origin inside ``P``."""
    normals, offsets = polygon.edges()
    if np.any(offsets <= 1e-9):
        raise OriginNotInterior("the origin must lie strictly inside the polygon")
    return convex_hull(normals / offsets[:, None])


def _clip(points, normal, offset):
    out = []
    n = len(points)
    for i in range(n):
        cur, nxt = points[i], points[(i + 1) % n]
        fc = cur @ normal - offset
        fn = nxt @ normal - offset
        if fc <= 0.0:
            out.append(cur)
        if fc * fn < 0.0:
            t = fc / (fc - fn)
            out.append(cur + t * (nxt - cur))
    return out


def intersect(a, b):
    """Intersection of two convex polygons by clipping ``a`` against the edges of ``b``."""
    pts = list(a.vertices)
    for normal, offset in zip(*b.edges()):
        pts = _clip(pts, normal, offset)
        if len(pts) < 3:
            raise EmptyIntersection("polygons do not overlap")
    try:
        return convex_hull(np.array(pts))
    except DegenerateInput as exc:
        raise EmptyIntersection("polygons meet in a set without interior") from exc


def hull_of_union(a, b):
    return convex_hull(np.vstack([a.vertices, b.vertices]))


def hausdorff_distance(a, b):
    """Symmetric Hausdorff distance between two convex polygons.

    For convex sets the distance to the other set is a convex function, so
    its maximum over a polygon is attained at a vertex.
    """
    return float(max(np.max(b.distance(a.vertices)), np.max(a.distance(b.vertices))))


def contains(polygon, points, tol=0.0):
    normals, offsets = polygon.edges()
    p = plane_points(points)
    return np.all(p @ normals.T <= offsets + tol, axis=-1)
