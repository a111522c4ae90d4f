"""Positive continuous functions on the unit circle and their max/min algebra.

An integrand is evaluated at angles (radians); ``g(theta)`` accepts scalars
or arrays.  Every integrand checks positivity on a dense uniform grid when it
is constructed and raises :class:`NotPositive` with the offending angle.
"""
from collections import namedtuple
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .euclid_convex import ConvexPolygon, convex_hull
from .exceptions import DegenerateHull, DegenerateInput, IntegrandError, NotPositive
from .sphere_core import inversion

TWO_PI = 2.0 * np.pi
POSITIVITY_SAMPLES = 4096


def uniform_angles(K):
    return TWO_PI * np.arange(K) / K


class Integrand:
    """Base class; subclasses implement ``_evaluate`` on float arrays."""

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self._evaluate(theta)

    def _evaluate(self, theta):
        raise NotImplementedError

    def _check_positive(self):
        theta = uniform_angles(POSITIVITY_SAMPLES)
        values = self._evaluate(theta)
        bad = ~(np.isfinite(values) & (values > 0.0))
        if np.any(bad):
            i = int(np.argmax(bad))
            raise NotPositive(float(theta[i]), float(values[i]))

    def kink_angles(self):
        """Angles in ``[0, 2pi)`` where the integrand may fail to be smooth."""
        return np.empty(0)

    def __str__(self):
        return self.describe()

    def describe(self):
        return type(self).__name__


class Constant(Integrand):
    def __init__(self, value):
        self.value = float(value)
        self._check_positive()

    def _evaluate(self, theta):
        return np.full(np.shape(theta), self.value)

    def describe(self):
        return f"const {self.value!r}"


class Expression(Integrand):
    def __init__(self, ast):
        self.ast = ast
        self._check_positive()

    def _evaluate(self, theta):
        return np.broadcast_to(self.ast.evaluate(theta), np.shape(theta)).astype(float)

    def describe(self):
        return f"expr {self.ast}"


class SupportPolygon(Integrand):
    """Support function ``theta -> max_v v . (cos theta, sin theta)`` of a polygon."""

    def __init__(self, polygon):
        if not isinstance(polygon, ConvexPolygon):
            polygon = convex_hull(polygon)
        self.polygon = polygon
        self._check_positive()

    def _evaluate(self, theta):
        u = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        return self.polygon.support(u)

    def kink_angles(self):
        normals, _ = self.polygon.edges()
        return np.mod(np.arctan2(normals[:, 1], normals[:, 0]), TWO_PI)

    def describe(self):
        pairs = ",".join(f"({x!r},{y!r})" for x, y in self.polygon.vertices)
        return f"poly [{pairs}]"


class Samples(Integrand):
    """Periodic piecewise-linear interpolation of an ``(angle, value)`` table."""

    def __init__(self, table):
        table = np.asarray(table, dtype=float)
        if table.ndim != 2 or table.shape[1] != 2:
            raise IntegrandError("sample table must have rows (angle, value)")
        if len(table) < 8:
            raise IntegrandError("sample table needs at least 8 entries")
        angles, values = table[:, 0], table[:, 1]
        if np.any(np.diff(angles) <= 0.0):
            raise IntegrandError("sample angles must be strictly increasing")
        if angles[0] < 0.0 or angles[-1] >= TWO_PI:
            raise IntegrandError("sample angles must lie in [0, 2*pi)")
        self.angles = angles
        self.values = values
        self._check_positive()

    @classmethod
    def from_file(cls, path):
        rows = []
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise IntegrandError(f"{path}:{lineno}: expected 'angle value'")
                try:
                    rows.append([float(parts[0]), float(parts[1])])
                except ValueError as exc:
                    raise IntegrandError(f"{path}:{lineno}: {exc}") from exc
        return cls(rows)

    def _evaluate(self, theta):
        return np.interp(np.mod(theta, TWO_PI), self.angles, self.values, period=TWO_PI)

    def kink_angles(self):
        return self.angles.copy()

    def describe(self):
        return f"samples <{len(self.angles)} rows>"


def _crossings(f, g, extra):
    """Angles where ``f - g`` changes sign, refined with Brent's method."""
    grid = np.unique(np.concatenate([uniform_angles(POSITIVITY_SAMPLES), extra]))
    d = f(grid) - g(grid)
    d_next = np.roll(d, -1)
    right = np.roll(grid, -1)
    right[-1] += TWO_PI
    roots = []
    for i in np.nonzero(d * d_next < 0.0)[0]:
        roots.append(brentq(lambda t: float(f(t) - g(t)), grid[i], right[i], xtol=1e-15))
    # exact zeros on the grid with a sign change across them
    d_prev = np.roll(d, 1)
    roots.extend(grid[(d == 0.0) & (d_prev * d_next < 0.0)])
    return np.mod(np.array(roots, dtype=float), TWO_PI)


class _Lattice(Integrand):
    _op = None
    _word = None

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self._check_positive()

    def _evaluate(self, theta):
        return self._op(self.left(theta), self.right(theta))

    def kink_angles(self):
        children = np.concatenate([self.left.kink_angles(), self.right.kink_angles()])
        return np.unique(np.concatenate([children, _crossings(self.left, self.right, children)]))

    def describe(self):
        return f"{self._word}({self.left.describe()}, {self.right.describe()})"


class Max(_Lattice):
    _op = staticmethod(np.maximum)
    _word = "max"


class Min(_Lattice):
    _op = staticmethod(np.minimum)
    _word = "min"


def pointwise_max(g1, g2):
    return Max(g1, g2)


def pointwise_min(g1, g2):
    return Min(g1, g2)


def graph_points(g, K):
    """Polar plot ``g(theta_i) (cos theta_i, sin theta_i)`` at ``theta_i = 2 pi i / K``."""
    if K < 3:
        raise ValueError("graph_points needs K >= 3")
    theta = uniform_angles(K)
    return g(theta)[:, None] * np.column_stack([np.cos(theta), np.sin(theta)])


def inverted_graph_points(g, K):
    return inversion(graph_points(g, K))


ConvexityResult = namedtuple("ConvexityResult", ["is_convex", "worst_violation", "witness"])


def is_convex_integrand(g, K=720, tol=None):
    """Test whether the inverted graph of ``g`` lies on the boundary of its own hull.

    Parameters
    ----------
    g : Integrand
    K : int
        Number of uniform sample angles, at least 64.
    tol : float, optional
        Allowed depth of a sample point inside the hull.  Defaults to
        ``1e-7`` times the largest radius among the inverted points.

    Returns
    -------
    ConvexityResult
        ``(is_convex, worst_violation, witness)`` where ``witness`` is the
        angle of the deepest interior point.
    """
    if K < 64:
        raise ValueError("is_convex_integrand needs K >= 64")
    pts = inverted_graph_points(g, K)
    if tol is None:
        tol = 1e-7 * float(np.max(np.linalg.norm(pts, axis=1)))
    try:
        hull = convex_hull(pts)
    except DegenerateInput as exc:
        raise DegenerateHull("inverted graph has no 2D hull") from exc
    if hull.area() < 1e-12:
        raise DegenerateHull("inverted graph hull has (near) zero area")
    depth = np.maximum(hull.interior_distance(pts), 0.0)
    i = int(np.argmax(depth))
    worst = float(depth[i])
    return ConvexityResult(worst <= tol, worst, float(uniform_angles(K)[i]))


# --- expression trees -------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float

    def evaluate(self, theta):
        return self.value

    def __str__(self):
        return repr(self.value)


@dataclass(frozen=True)
class Trig:
    func: str
    k: int

    def evaluate(self, theta):
        return (np.cos if self.func == "cos" else np.sin)(self.k * theta)

    def __str__(self):
        return f"{self.func}({self.k}t)"


@dataclass(frozen=True)
class Abs:
    arg: object

    def evaluate(self, theta):
        return np.abs(self.arg.evaluate(theta))

    def __str__(self):
        return f"abs({self.arg})"


_BINARY = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "max": np.maximum,
    "min": np.minimum,
}


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object

    def evaluate(self, theta):
        return _BINARY[self.op](self.left.evaluate(theta), self.right.evaluate(theta))

    def __str__(self):
        if self.op in ("max", "min"):
            return f"{self.op}({self.left}, {self.right})"
        return f"({self.left} {self.op} {self.right})"
