"""Named integrands and seeded random generators used by tests and demos."""
import numpy as np

from .euclid_convex import DegenerateInput, convex_hull
from .integrand import SupportPolygon

SQUARE = ((1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0))
CROSS = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))


def square_support(half_width=1.0):
    return SupportPolygon(np.asarray(SQUARE) * half_width)


def diamond_support(radius=1.2):
    return SupportPolygon(np.asarray(CROSS) * radius)


def min_counterexample():
    """Square [-1, 1]^2 and diamond of radius 1.2: their pointwise min is not a convex integrand."""
    return square_support(1.0), diamond_support(1.2)


def random_convex_polygon(rng, n_min=3, n_max=12, inradius=0.1, max_radius=2.0):
    """Random convex polygon containing the disk of radius ``inradius`` about the origin.

    Vertices are drawn in polar form with radii in ``[0.3, max_radius]`` and
    the draw is repeated until the hull has ``n_min`` to ``n_max`` vertices
    and the origin is at least ``inradius`` from every edge.  The support
    function then takes values in ``[inradius, max_radius]``.
    """
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        theta = np.sort(rng.uniform(0.0, 2.0 * np.pi, n))
        r = rng.uniform(0.3, max_radius, n)
        try:
            poly = convex_hull(np.column_stack([r * np.cos(theta), r * np.sin(theta)]))
        except DegenerateInput:
            continue
        _, offsets = poly.edges()
        if len(poly) >= n_min and offsets.min() >= inradius:
            return poly


def random_support_integrand(rng, **kwargs):
    return SupportPolygon(random_convex_polygon(rng, **kwargs))
