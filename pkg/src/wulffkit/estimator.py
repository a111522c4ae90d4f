"""Scikit-learn style front end for Wulff shape construction."""
import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .validation import check_count, check_integrand, check_points
from .wulff import MIN_DIRECTIONS, dual_polygon, wulff_direct, wulff_spherical


class WulffShape(BaseEstimator):
    """Build the Wulff shape of an integrand and query it like a fitted model.

    Parameters
    ----------
    n_directions : int, default=720
        Number of uniform sampling directions.
    method : {"direct", "spherical"}, default="direct"
        Half-plane intersection in the plane, or the route through the
        spherical blow-up and polar set.
    refine_kinks : bool, default=True
        Add the integrand's non-smooth angles to the direction set.
    dual : bool, default=False
        Fit the dual Wulff shape instead.

    Attributes
    ----------
    integrand_ : Integrand
    shape_ : ConvexPolygon
    directions_used_ : int
    """

    def __init__(self, n_directions=720, method="direct", refine_kinks=True, dual=False):
        self.n_directions = n_directions
        self.method = method
        self.refine_kinks = refine_kinks
        self.dual = dual

    def fit(self, X, y=None):
        """Fit from an integrand, a DSL string, or an ``(angle, value)`` table."""
        K = check_count(self.n_directions, MIN_DIRECTIONS, "n_directions")
        if self.method not in ("direct", "spherical"):
            raise ValueError(f"method must be 'direct' or 'spherical', got {self.method!r}")
        g = check_integrand(X)
        build = wulff_direct if self.method == "direct" else wulff_spherical
        result = build(g, K, self.refine_kinks)
        self.integrand_ = g
        self.directions_used_ = result.directions_used
        self.shape_ = dual_polygon(result.shape) if self.dual else result.shape
        normals, offsets = self.shape_.edges()
        self.normals_ = normals
        self.offsets_ = offsets
        return self

    def decision_function(self, X):
        """Largest edge violation ``x . n - c``; non-positive inside the shape."""
        check_is_fitted(self, "shape_")
        X = check_points(X)
        return np.max(X @ self.normals_.T - self.offsets_, axis=1)

    def predict(self, X):
        """Membership of each point in the fitted shape."""
        return self.decision_function(X) <= 1e-12

    def transform(self, X):
        """Gauge of the fitted shape, ``max_i x . n_i / c_i``, as one column.

        Values below 1 are interior, 1 is the boundary.
        """
        check_is_fitted(self, "shape_")
        X = check_points(X)
        gauge = np.max(X @ (self.normals_ / self.offsets_[:, None]).T, axis=1)
        return gauge[:, None]
