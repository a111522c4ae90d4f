"""Input validation helpers shared by the estimator and the CLI."""
import numbers

import numpy as np
from sklearn.utils import check_array

from .integrand import Integrand, Samples


def check_integrand(gamma):
    """Coerce ``gamma`` to an :class:`Integrand`.

    Accepts an integrand, a DSL string, or an ``(n, 2)`` array of
    ``(angle, value)`` rows (interpreted as a sample table).
    """
    if isinstance(gamma, Integrand):
        return gamma
    if isinstance(gamma, str):
        from .dsl import parse_integrand_spec

        return parse_integrand_spec(gamma)
    table = check_array(gamma, dtype=np.float64, ensure_min_samples=8)
    if table.shape[1] != 2:
        raise ValueError(f"sample table must have 2 columns (angle, value), got {table.shape[1]}")
    return Samples(table)


def check_points(X):
    """Validate a batch of plane points as a float ``(n, 2)`` array."""
    X = check_array(X, dtype=np.float64)
    if X.shape[1] != 2:
        raise ValueError(f"expected 2 features (x, y), got {X.shape[1]}")
    return X


def check_count(value, minimum, name):
    if not isinstance(value, numbers.Integral) or isinstance(value, bool):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)
