"""Exceptions for the division-free root iteration."""


class RootIterError(Exception):
    """Base exception for root iteration errors."""

    pass


class InvalidExponentError(RootIterError, ValueError):
    """Raised when an exponent r/s is not a fraction in (0, 1)."""

    pass


class OutOfUnitIntervalError(RootIterError, ValueError):
    """Raised when an iteration argument t lies outside [0, 1].

    Attributes:
        value: The first offending argument
    """

    def __init__(self, value: float):
        self.value = value
        super().__init__(
            f"iteration argument must lie in [0, 1], got {value!r}"
        )


__all__ = [
    "RootIterError",
    "InvalidExponentError",
    "OutOfUnitIntervalError",
]
