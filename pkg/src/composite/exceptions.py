"""Exceptions for the composite approximant."""


class CompositeError(Exception):
    """Base exception for composite approximant errors."""

    pass


class InvalidDegreeError(CompositeError, ValueError):
    """Raised when m, k, gamma or N is out of range."""

    pass


class UnknownConventionError(CompositeError, ValueError):
    """Raised for an unknown parameter counting convention."""

    pass


__all__ = [
    "CompositeError",
    "InvalidDegreeError",
    "UnknownConventionError",
]
