"""
Gauss-Legendre quadrature and L^p error functionals.

Basic usage:
    >>> from src.libs.chebyshev import SYMMETRIC
    >>> from src.libs.quadrature import PanelPartition, lp_error
    >>>
    >>> cut = PanelPartition.around(SYMMETRIC, [0.0])
    >>> lp_error(np.abs, np.zeros_like, 1.0, SYMMETRIC, cut)
    1.0
"""

from .config import DEFAULT_ORDER_PER_PANEL
from .exceptions import (
    InvalidOrderError,
    InvalidPartitionError,
    NonFiniteIntegrandError,
    QuadratureError,
)
from .rules import (
    PanelPartition,
    QuadRule,
    composite_rule,
    gauss_legendre,
    integrate,
    lp_error,
    sup_error,
)

__all__ = [
    "DEFAULT_ORDER_PER_PANEL",
    # Types
    "PanelPartition",
    "QuadRule",
    # Operations
    "composite_rule",
    "gauss_legendre",
    "integrate",
    "lp_error",
    "sup_error",
    # Exceptions
    "QuadratureError",
    "InvalidOrderError",
    "InvalidPartitionError",
    "NonFiniteIntegrandError",
]
