"""
Star-shaped level sets with angular cusps.

Basic usage:
    >>> from src.star2d import approximate_rstar, grid_l2_error
    >>>
    >>> deep = approximate_rstar(params, m=20, k=15)
    >>> grid_l2_error(params, exact_profile(params), deep, GridSpec(400))
"""

from .approximant import (
    ANGLE_DOMAIN,
    RadialApproximant,
    approximate_rstar,
    baseline_rstar,
)
from .generator import make_uneven_star, symmetric_star
from .grid import (
    Normalization,
    grid_field,
    grid_l2_distance,
    grid_l2_error,
    grid_points,
    level_field,
)
from .profile import (
    RadialProfile,
    exact_profile,
    level_fn,
    r_star,
    wrapped_distance,
)

__all__ = [
    "ANGLE_DOMAIN",
    "Normalization",
    "RadialApproximant",
    "RadialProfile",
    "approximate_rstar",
    "baseline_rstar",
    "exact_profile",
    "grid_field",
    "grid_l2_distance",
    "grid_l2_error",
    "grid_points",
    "level_field",
    "level_fn",
    "make_uneven_star",
    "r_star",
    "symmetric_star",
    "wrapped_distance",
]
