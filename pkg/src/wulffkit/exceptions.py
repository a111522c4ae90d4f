"""Exception hierarchy for wulffkit."""


class WulffError(Exception):
    """Base class for every error raised by this package."""


class GeometryError(WulffError, ValueError):
    pass


class ZeroPoint(GeometryError):
    """Inversion requested at (or numerically at) the origin."""


class NotInOpenHemisphere(GeometryError):
    """Central projection requested for a point with w <= 0."""


class AtPole(GeometryError):
    """Spherical blow-up requested at +N or -N."""


class DegenerateInput(GeometryError):
    """All points lie on one line (no 2D hull)."""


class DegenerateHull(GeometryError):
    pass


class Unbounded(GeometryError):
    """Half-plane normals do not positively span the plane."""


class OriginNotInterior(GeometryError):
    pass


class EmptyIntersection(GeometryError):
    pass


class NotHemispherical(GeometryError):
    pass


class PolarNotHemispherical(GeometryError):
    pass


class Inconclusive(WulffError):
    """A feasibility margin fell inside the numerical dead band."""


class IntegrandError(WulffError, ValueError):
    pass


class NotPositive(IntegrandError):
    def __init__(self, angle, value):
        super().__init__(f"integrand is not positive at theta={angle!r} (value {value!r})")
        self.angle = angle
        self.value = value


class ParseError(IntegrandError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class HypothesisError(WulffError):
    """A verifier refused to run because its hypothesis does not hold."""


class NotConvexIntegrand(HypothesisError):
    pass


class HypothesisNotMet(HypothesisError):
    pass
