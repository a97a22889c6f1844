"""
Chebyshev-basis polynomials on arbitrary intervals.

Interpolation uses the Chebyshev points of the second kind (the extrema
grid, endpoints included) and the discrete cosine relation summed
directly. Evaluation uses the Clenshaw recurrence and is written with
additions and multiplications only, so it accepts floats, numpy arrays
and instrumented scalars alike.
"""

import json
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Sequence

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from .exceptions import InvalidIntervalError, NonFiniteSampleError

logger = logging.getLogger(__name__)

# Grid density used for sup-norm estimates, points per coefficient
SUP_GRID_FACTOR = 64


@dataclass(frozen=True)
class Interval:
    """A finite closed interval [lo, hi] with lo < hi."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidIntervalError(
                f"interval bounds must be finite: [{self.lo}, {self.hi}]"
            )
        if not self.lo < self.hi:
            raise InvalidIntervalError(
                f"interval must satisfy lo < hi: [{self.lo}, {self.hi}]"
            )

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.hi - self.lo)

    @cached_property
    def inv_half_width(self) -> float:
        # Precomputed so that mapping into [-1, 1] is a multiplication
        return 1.0 / self.half_width

    def to_reference(self, x: Any) -> Any:
        """Map x from this interval onto [-1, 1]."""
        return (x - self.midpoint) * self.inv_half_width

    def from_reference(self, u: Any) -> Any:
        """Map u from [-1, 1] onto this interval."""
        return self.midpoint + self.half_width * u

    def linspace(self, num: int) -> np.ndarray:
        return np.linspace(self.lo, self.hi, num)

    def to_list(self) -> list[float]:
        return [self.lo, self.hi]


SYMMETRIC = Interval(-1.0, 1.0)
UNIT = Interval(0.0, 1.0)


@dataclass(frozen=True)
class ChebPoly:
    """
    A polynomial sum_k c_k T_k(u) where u is x mapped onto [-1, 1].

    Attributes:
        coeffs: Chebyshev coefficients c_0..c_m
        domain: The interval the polynomial lives on
    """

    coeffs: tuple[float, ...]
    domain: Interval = field(default=SYMMETRIC)

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a ChebPoly needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Any) -> Any:
        return cheb_eval(self, x)

    def derivative(self) -> "ChebPoly":
        """Return p' on the same domain."""
        if self.degree == 0:
            return ChebPoly((0.0,), self.domain)
        coeffs = npcheb.chebder(np.asarray(self.coeffs))
        return ChebPoly(
            tuple(coeffs * self.domain.inv_half_width), self.domain
        )

    def to_dict(self) -> dict:
        """
        Convert the polynomial to a dictionary.

        Returns:
            Dictionary with "domain" and "coeffs"
        """
        return {"domain": self.domain.to_list(), "coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ChebPoly":
        """
        Create a ChebPoly from a dictionary.

        Args:
            data: Dictionary with "domain" [lo, hi] and "coeffs"

        Returns:
            New ChebPoly instance
        """
        lo, hi = data["domain"]
        return cls(tuple(data["coeffs"]), Interval(float(lo), float(hi)))

    @classmethod
    def from_json(cls, json_str: str) -> "ChebPoly":
        return cls.from_dict(json.loads(json_str))


def cheb_nodes(m: int, domain: Interval = SYMMETRIC) -> np.ndarray:
    """
    Chebyshev points of the second kind, ascending.

    Args:
        m: Polynomial degree; m + 1 points are returned
        domain: Interval the points are mapped onto

    Returns:
        Array of m + 1 points, endpoints included when m >= 1
    """
    if m < 0:
        raise ValueError(f"degree must be non-negative, got {m}")
    if m == 0:
        return np.array([domain.midpoint])
    # The sine form is exactly antisymmetric about the midpoint
    j = np.arange(m + 1)
    reference = np.sin(np.pi * (2 * j - m) / (2 * m))
    nodes = domain.from_reference(reference)
    nodes[0], nodes[-1] = domain.lo, domain.hi
    return nodes


def _sample(f: Callable[[float], float], nodes: np.ndarray) -> np.ndarray:
    values = np.empty(len(nodes))
    for i, x in enumerate(nodes):
        value = float(f(float(x)))
        if not math.isfinite(value):
            raise NonFiniteSampleError(float(x), value)
        values[i] = value
    return values


def coefficients_from_values(values: Sequence[float]) -> np.ndarray:
    """
    Chebyshev coefficients of the interpolant through samples taken at
    the ascending second-kind points.
    """
    values = np.asarray(values, dtype=float)
    m = len(values) - 1
    if m == 0:
        return values.copy()
    # Descending order matches x_j = cos(pi j / m)
    f = values[::-1] * np.where(
        (np.arange(m + 1) == 0) | (np.arange(m + 1) == m), 0.5, 1.0
    )
    jk = np.outer(np.arange(m + 1), np.arange(m + 1)) % (2 * m)
    coeffs = (2.0 / m) * (np.cos(np.pi * jk / m) @ f)
    coeffs[0] *= 0.5
    coeffs[m] *= 0.5
    return coeffs


def cheb_interpolate(
    f: Callable[[float], float], m: int, domain: Interval = SYMMETRIC
) -> ChebPoly:
    """
    Interpolate f at the m + 1 second-kind points of the domain.

    Args:
        f: Real-valued callable, called once per node with a float
        m: Degree of the interpolant
        domain: Interval of interpolation

    Returns:
        ChebPoly of degree m matching f at every node

    Raises:
        NonFiniteSampleError: If f is NaN or infinite at a node
    """
    nodes = cheb_nodes(m, domain)
    values = _sample(f, nodes)
    coeffs = coefficients_from_values(values)
    logger.debug(
        "interpolated: degree=%s, domain=%s, tail=%s",
        m,
        domain.to_list(),
        abs(coeffs[-1]),
    )
    return ChebPoly(tuple(coeffs), domain)


def cheb_eval(p: ChebPoly, x: Any) -> Any:
    """
    Evaluate p at x with the Clenshaw recurrence.

    Points outside the domain are extrapolated without complaint; the
    inner root map can overshoot [0, 1] by a few ulps.
    """
    u = p.domain.to_reference(x)
    two_u = 2.0 * u
    b1 = 0.0
    b2 = 0.0
    for c in reversed(p.coeffs[1:]):
        b1, b2 = c + two_u * b1 - b2, b1
    return p.coeffs[0] + u * b1 - b2


def sup_norm(p: ChebPoly, grid_size: int | None = None) -> float:
    """Estimate max |p| on a uniform grid that includes the endpoints."""
    size = grid_size or SUP_GRID_FACTOR * (p.degree + 1)
    size = max(size, 2)
    values = cheb_eval(p, p.domain.linspace(size))
    return float(np.max(np.abs(values)))


def cheb_derivative_bound(p: ChebPoly) -> float:
    """
    Markov bound on sup |p'|: m^2 sup |p|, times 2 / (hi - lo) on a
    general interval (the factor is 1 on [-1, 1]).
    """
    m = p.degree
    if m == 0:
        return 0.0
    return m * m * sup_norm(p) * p.domain.inv_half_width
