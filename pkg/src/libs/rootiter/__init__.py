"""
Division-free coupled Newton iteration for fractional powers t^(r/s).

Basic usage:
    >>> from src.libs.rootiter import Exponent, phi
    >>>
    >>> phi(0.25, Exponent(1, 2), 20)
    0.5
"""

from .exceptions import (
    InvalidExponentError,
    OutOfUnitIntervalError,
    RootIterError,
)
from .iteration import (
    UNIT_SLACK,
    Exponent,
    InnerState,
    InnerTrace,
    TraceRow,
    basin_entry,
    inner_step,
    ipow,
    iterate,
    phi,
    sup_phi_error,
    trace,
)
from .opcount import CountingScalar, OpCounter, plain

__all__ = [
    "UNIT_SLACK",
    # Types
    "Exponent",
    "InnerState",
    "InnerTrace",
    "TraceRow",
    # Operations
    "basin_entry",
    "inner_step",
    "ipow",
    "iterate",
    "phi",
    "sup_phi_error",
    "trace",
    # Instrumentation
    "CountingScalar",
    "OpCounter",
    "plain",
    # Exceptions
    "RootIterError",
    "InvalidExponentError",
    "OutOfUnitIntervalError",
]
