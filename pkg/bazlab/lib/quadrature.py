from __future__ import annotations

import numpy as np

from .._constants import TWO_PI, MAX_QUAD_POINTS

__all__ = [
    "circle_angles",
    "periodic_trapezoid",
    "arc_trapezoid",
    "cumulative_periodic",
    "richardson_error",
    "points_for_radius",
    "aligned",
]


def circle_angles(K: int) -> np.ndarray:
    return TWO_PI * np.arange(K) / K


def periodic_trapezoid(values: np.ndarray) -> float:
    """Integral over ``[0, 2 pi)`` of a periodic integrand sampled on a uniform grid."""
    return float(TWO_PI * np.mean(values))


def arc_trapezoid(values: np.ndarray, theta1: float, theta2: float) -> float:
    """Composite trapezoid over ``[theta1, theta2]`` from samples at both endpoints and ``K-1`` interior points."""
    h = (theta2 - theta1) / (values.size - 1)
    return float(h * (np.sum(values) - 0.5 * (values[0] + values[-1])))


def cumulative_periodic(values: np.ndarray, turns: int = 2) -> np.ndarray:
    """Running trapezoid integral of a periodic integrand over ``turns`` periods.

    ``values`` are samples at ``2 pi k / K``. Entry ``j`` of the result is the
    integral from 0 to ``2 pi j / K``, so any arc starting on the grid is a
    difference of two entries.
    """
    K = values.size
    h = TWO_PI / K
    extended = np.concatenate([np.tile(values, turns), values[:1]])
    steps = 0.5 * h * (extended[:-1] + extended[1:])
    return np.concatenate([[0.0], np.cumsum(steps)])


def richardson_error(coarse: float, fine: float, order: int = 2) -> float:
    """Error estimate of ``fine`` from the same rule at half the points."""
    return abs(fine - coarse) / (2**order - 1)


def points_for_radius(r: float, base: int, *, per_width: float = 4.0) -> int:
    """Smallest power of two >= ``base`` whose spacing resolves features of width ``1 - r``."""
    if r >= 1.0:
        return MAX_QUAD_POINTS
    wanted = per_width * TWO_PI / (1.0 - r)
    K = base
    while K < wanted and K < MAX_QUAD_POINTS:
        K *= 2
    return K


def aligned(K: int, grid: int) -> bool:
    """True when a K-point circle grid contains every point of a `grid`-point one."""
    return K % grid == 0
