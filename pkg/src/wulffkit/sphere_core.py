"""Coordinate maps between the plane and the unit sphere S^2.

Plane points are arrays with a trailing axis of length 2, sphere points have
a trailing axis of length 3.  Every function accepts a single point or a
stack of points and returns the same layout.  The plane R^2 is identified
with the affine plane ``w = 1`` in R^3; the trailing ``1`` is implicit.
"""
import numpy as np

from .exceptions import AtPole, GeometryError, NotInOpenHemisphere, ZeroPoint

EPS_ZERO = 1e-12
NORTH = np.array([0.0, 0.0, 1.0])
NORTH.flags.writeable = False


def plane_points(p):
    p = np.asarray(p, dtype=float)
    if p.shape[-1] != 2:
        raise GeometryError(f"expected plane points with trailing dimension 2, got {p.shape}")
    if not np.all(np.isfinite(p)):
        raise GeometryError("plane points must be finite")
    return p


def sphere_points(P, min_norm=1e-9):
    """Normalize ``P`` onto the unit sphere.

    Raises
    ------
    GeometryError
        If any input vector has norm below ``min_norm``.
    """
    P = np.asarray(P, dtype=float)
    if P.shape[-1] != 3:
        raise GeometryError(f"expected sphere points with trailing dimension 3, got {P.shape}")
    norms = np.linalg.norm(P, axis=-1, keepdims=True)
    if np.any(~np.isfinite(norms)) or np.any(norms < min_norm):
        raise GeometryError("cannot normalize a (near) zero vector onto the sphere")
    return P / norms


def inversion(p):
    """Invert through the unit circle and flip direction: ``p -> -p / |p|^2``.

    In polar form this is ``(theta, r) -> (-theta, 1/r)``.
    """
    p = plane_points(p)
    sq = np.sum(p * p, axis=-1, keepdims=True)
    if np.any(np.sqrt(sq) <= EPS_ZERO):
        raise ZeroPoint("inversion is undefined at the origin")
    return -p / sq


def central_unproject(p):
    """Lift plane points to the open upper hemisphere: ``(x, y) -> (x, y, 1)/|.|``."""
    p = plane_points(p)
    lifted = np.concatenate([p, np.ones(p.shape[:-1] + (1,))], axis=-1)
    return lifted / np.linalg.norm(lifted, axis=-1, keepdims=True)


def central_project(P):
    """Project from the centre of the sphere onto the plane ``w = 1``."""
    P = np.asarray(P, dtype=float)
    w = P[..., 2:3]
    if np.any(w <= EPS_ZERO):
        raise NotInOpenHemisphere("central projection needs w > 0")
    return P[..., :2] / w


def spherical_blowup(P):
    """Rotate ``P`` by a right angle towards the north pole inside span{N, P}.

    ``Psi(P) = (N - (N.P) P) / sqrt(1 - (N.P)^2)``.  The image is orthogonal
    to ``P``, lies in span{N, P} and has positive ``w``.
    """
    P = np.asarray(P, dtype=float)
    if P.shape[-1] != 3:
        raise GeometryError("spherical_blowup expects sphere points")
    c = P[..., 2:3]
    s2 = 1.0 - c * c
    if np.any(s2 <= EPS_ZERO):
        raise AtPole("spherical blow-up is undefined at the poles")
    num = NORTH - c * P
    # equals sqrt(1 - c^2) for unit P, without the cancellation near the poles
    return num / np.linalg.norm(num, axis=-1, keepdims=True)


def chart_frame(center):
    """Right-handed orthonormal frame ``(e1, e2, center)`` as the rows of a 3x3 matrix.

    For ``center == N`` the frame is the identity, so the chart coincides
    with :func:`central_project`.
    """
    c = sphere_points(center)
    if np.allclose(c, NORTH, rtol=0.0, atol=1e-15):
        return np.eye(3)
    helper = np.array([1.0, 0.0, 0.0]) if abs(c[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = helper - (helper @ c) * c
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(c, e1)
    return np.vstack([e1, e2, c])


def chart_project(P, center):
    """Central projection onto the tangent plane at ``center`` (chart coordinates)."""
    local = np.asarray(P, dtype=float) @ chart_frame(center).T
    return central_project(local)


def chart_unproject(x, center):
    return central_unproject(x) @ chart_frame(center)
