"""
Custom exceptions for the Chebyshev package.
"""


class ChebyshevError(Exception):
    """Base exception for all Chebyshev-related errors."""

    pass


class InvalidIntervalError(ChebyshevError, ValueError):
    """Raised when an interval is empty, reversed or not finite."""

    pass


class NonFiniteSampleError(ChebyshevError, ValueError):
    """Raised when a sampled function value is NaN or infinite.

    Attributes:
        node: The abscissa where the bad value was produced
        value: The offending value
    """

    def __init__(self, node: float, value: float):
        self.node = node
        self.value = value
        super().__init__(
            f"non-finite sample {value!r} at node {node!r}"
        )
