"""Five-point finite-difference stencils used by the verification oracle.

Closed forms are never differentiated numerically in production code; these helpers
only exist so the oracle can check identities independently of the derivations.
"""

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

DEFAULT_STEP = 1e-4


def first_derivative(func: Callable[[NDArray], NDArray], x: ArrayLike, step: float = DEFAULT_STEP) -> NDArray:
    """Fourth-order central first derivative of ``func`` at ``x``."""
    x = np.asarray(x, dtype=float)
    return (func(x - 2 * step) - 8 * func(x - step) + 8 * func(x + step) - func(x + 2 * step)) / (12 * step)


def second_derivative(func: Callable[[NDArray], NDArray], x: ArrayLike, step: float = DEFAULT_STEP) -> NDArray:
    """Fourth-order central second derivative of ``func`` at ``x``."""
    x = np.asarray(x, dtype=float)
    return (-func(x - 2 * step) + 16 * func(x - step) - 30 * func(x) + 16 * func(x + step) - func(x + 2 * step)) / (12 * step**2)


def grid_second_derivative(values: NDArray, spacing: float) -> NDArray:
    """Fourth-order second derivative of sampled values on a uniform grid.

    Returns an array two nodes shorter on each side (interior nodes only).
    """
    v = np.asarray(values)
    return (-v[:-4] + 16 * v[1:-3] - 30 * v[2:-2] + 16 * v[3:-1] - v[4:]) / (12 * spacing**2)
