"""
Arithmetic operation counting.

A CountingScalar wraps a float and records every arithmetic operation
performed on it in a shared OpCounter. Running a production code path on
CountingScalar inputs is the debug build used to check that evaluation
never divides.
"""

from dataclasses import dataclass
from typing import Any


@dataclass
class OpCounter:
    """Tallies of arithmetic operations."""

    additions: int = 0
    multiplications: int = 0
    divisions: int = 0
    powers: int = 0

    @property
    def total(self) -> int:
        return (
            self.additions
            + self.multiplications
            + self.divisions
            + self.powers
        )

    def to_dict(self) -> dict:
        return {
            "additions": self.additions,
            "multiplications": self.multiplications,
            "divisions": self.divisions,
            "powers": self.powers,
        }


def _value(other: Any) -> float:
    return other.value if isinstance(other, CountingScalar) else other


class CountingScalar:
    """A float that reports its arithmetic to an OpCounter."""

    __slots__ = ("value", "counter")

    def __init__(self, value: float, counter: OpCounter):
        self.value = float(value)
        self.counter = counter

    def _wrap(self, value: float) -> "CountingScalar":
        return CountingScalar(value, self.counter)

    def __add__(self, other: Any) -> "CountingScalar":
        self.counter.additions += 1
        return self._wrap(self.value + _value(other))

    def __radd__(self, other: Any) -> "CountingScalar":
        self.counter.additions += 1
        return self._wrap(_value(other) + self.value)

    def __sub__(self, other: Any) -> "CountingScalar":
        self.counter.additions += 1
        return self._wrap(self.value - _value(other))

    def __rsub__(self, other: Any) -> "CountingScalar":
        self.counter.additions += 1
        return self._wrap(_value(other) - self.value)

    def __mul__(self, other: Any) -> "CountingScalar":
        self.counter.multiplications += 1
        return self._wrap(self.value * _value(other))

    def __rmul__(self, other: Any) -> "CountingScalar":
        self.counter.multiplications += 1
        return self._wrap(_value(other) * self.value)

    def __truediv__(self, other: Any) -> "CountingScalar":
        self.counter.divisions += 1
        return self._wrap(self.value / _value(other))

    def __rtruediv__(self, other: Any) -> "CountingScalar":
        self.counter.divisions += 1
        return self._wrap(_value(other) / self.value)

    def __floordiv__(self, other: Any) -> "CountingScalar":
        self.counter.divisions += 1
        return self._wrap(self.value // _value(other))

    def __pow__(self, other: Any) -> "CountingScalar":
        self.counter.powers += 1
        return self._wrap(self.value ** _value(other))

    def __neg__(self) -> "CountingScalar":
        return self._wrap(-self.value)

    def __abs__(self) -> "CountingScalar":
        return self._wrap(abs(self.value))

    def __float__(self) -> float:
        return self.value

    def __lt__(self, other: Any) -> bool:
        return self.value < _value(other)

    def __le__(self, other: Any) -> bool:
        return self.value <= _value(other)

    def __gt__(self, other: Any) -> bool:
        return self.value > _value(other)

    def __ge__(self, other: Any) -> bool:
        return self.value >= _value(other)

    def __repr__(self) -> str:
        return f"CountingScalar({self.value!r})"


def plain(x: Any) -> Any:
    """Strip the instrumentation, leaving floats and arrays alone."""
    return x.value if isinstance(x, CountingScalar) else x
