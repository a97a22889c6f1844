"""
Radial profile and level function of a star-shaped domain.

Angular distances are wrapped: d(theta, theta_j) = min(D, 2 pi - D) with
D = |theta - theta_j| mod 2 pi, so the profile is continuous across the
+/- pi seam.
"""

from typing import Any, Callable

import numpy as np

from src.models import StarParams

RadialProfile = Callable[[np.ndarray], np.ndarray]

TWO_PI = 2.0 * np.pi


def wrapped_distance(theta: Any, center: float) -> Any:
    """Angular distance in [0, pi] between theta and center."""
    delta = np.mod(np.abs(np.asarray(theta, dtype=float) - center), TWO_PI)
    return np.minimum(delta, TWO_PI - delta)


def r_star(theta: Any, params: StarParams) -> Any:
    """R0 + sum_j W_j exp(-lambda_j d_j^alpha_j)."""
    theta = np.asarray(theta, dtype=float)
    radius = np.full_like(theta, params.r0)
    for tip in params.tips:
        d = wrapped_distance(theta, tip.theta)
        radius = radius + tip.weight * np.exp(
            -tip.decay * d**tip.exponent.alpha
        )
    return float(radius) if radius.ndim == 0 else radius


def exact_profile(params: StarParams) -> RadialProfile:
    """r_star bound to a configuration."""

    def profile(theta: np.ndarray) -> np.ndarray:
        return r_star(theta, params)

    return profile


def level_fn(
    x: Any, y: Any, params: StarParams, rprofile: RadialProfile
) -> Any:
    """
    tanh(gamma (R(theta) - r)) at Cartesian points.

    The angle at the origin is 0 by convention.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    theta = np.arctan2(y, x)
    radius = np.hypot(x, y)
    values = np.tanh(params.sharpness * (rprofile(theta) - radius))
    return float(values) if np.ndim(values) == 0 else values
