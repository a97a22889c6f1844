"""Exceptions for the quadrature package."""


class QuadratureError(Exception):
    """Base exception for quadrature errors."""

    pass


class InvalidOrderError(QuadratureError, ValueError):
    """Raised when a rule order or grid size is out of range."""

    pass


class InvalidPartitionError(QuadratureError, ValueError):
    """Raised when panel breakpoints do not fit the interval."""

    pass


class NonFiniteIntegrandError(QuadratureError, ValueError):
    """Raised when an integrand sample is NaN or infinite.

    Attributes:
        abscissa: The point where the bad sample was produced
    """

    def __init__(self, abscissa: float):
        self.abscissa = abscissa
        super().__init__(f"non-finite integrand sample at x={abscissa!r}")


__all__ = [
    "QuadratureError",
    "InvalidOrderError",
    "InvalidPartitionError",
    "NonFiniteIntegrandError",
]
