"""
Chebyshev-basis polynomials: interpolation, evaluation and norms.

Basic usage:
    >>> from src.libs.chebyshev import UNIT, cheb_interpolate
    >>>
    >>> p = cheb_interpolate(math.exp, 10, UNIT)
    >>> p(0.5)
    1.6487212707001282
"""

from .exceptions import (
    ChebyshevError,
    InvalidIntervalError,
    NonFiniteSampleError,
)
from .poly import (
    SYMMETRIC,
    UNIT,
    ChebPoly,
    Interval,
    cheb_derivative_bound,
    cheb_eval,
    cheb_interpolate,
    cheb_nodes,
    coefficients_from_values,
    sup_norm,
)

__all__ = [
    # Types
    "ChebPoly",
    "Interval",
    "SYMMETRIC",
    "UNIT",
    # Operations
    "cheb_derivative_bound",
    "cheb_eval",
    "cheb_interpolate",
    "cheb_nodes",
    "coefficients_from_values",
    "sup_norm",
    # Exceptions
    "ChebyshevError",
    "InvalidIntervalError",
    "NonFiniteSampleError",
]
