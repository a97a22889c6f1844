"""
Deep composite polynomial approximation of cusp functions.

Basic usage:
    >>> from src.composite import balance, build
    >>> from src.models import single_cusp
    >>>
    >>> f = single_cusp(a=0.2, r=1, s=3)
    >>> G = build(f, m=balance(15, 4 / 3), k=15)
    >>> G(0.5)
"""

from .approximant import (
    CompositeApproximant,
    CuspLayer,
    balance,
    baseline_cheb,
    build,
    build_layer,
    evaluate,
    param_count,
)
from .exceptions import (
    CompositeError,
    InvalidDegreeError,
    UnknownConventionError,
)

__all__ = [
    "CompositeApproximant",
    "CuspLayer",
    "balance",
    "baseline_cheb",
    "build",
    "build_layer",
    "evaluate",
    "param_count",
    "CompositeError",
    "InvalidDegreeError",
    "UnknownConventionError",
]
