"""
Gauss-Legendre rules and L^p error functionals on panel partitions.

For 0 < p < 1 the L^p functional is a quasi-norm: it is computed by the
same formula (integral of |f - g|^p)^(1/p) but does not satisfy the
triangle inequality. Its p-th power is subadditive instead.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from src.libs.chebyshev import Interval

from .config import (
    DEFAULT_GRADING_LEVELS,
    DEFAULT_GRADING_RATIO,
    DEFAULT_ORDER_PER_PANEL,
    NEWTON_MAX_ITERATIONS,
    NEWTON_TOLERANCE,
)
from .exceptions import (
    InvalidOrderError,
    InvalidPartitionError,
    NonFiniteIntegrandError,
)

logger = logging.getLogger(__name__)

RealFn = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class QuadRule:
    """
    A Gauss-Legendre rule on [-1, 1].

    Attributes:
        nodes: Ascending roots of the Legendre polynomial of degree order
        weights: Positive weights summing to 2
        order: Number of nodes
    """

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def mapped(self, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights of this rule carried onto [lo, hi]."""
        half = 0.5 * (hi - lo)
        return 0.5 * (lo + hi) + half * self.nodes, half * self.weights


def _legendre(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """P_n(x) and P_{n-1}(x) by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for j in range(2, n + 1):
        p_prev, p = p, ((2 * j - 1) * x * p - (j - 1) * p_prev) / j
    return p, p_prev


@lru_cache(maxsize=64)
def gauss_legendre(order: int) -> QuadRule:
    """
    Build the Gauss-Legendre rule with `order` nodes.

    Roots are refined by Newton's method from the asymptotic guesses
    cos(pi (i - 1/4) / (n + 1/2)) and then symmetrized.

    Raises:
        InvalidOrderError: If order < 1
    """
    if order < 1:
        raise InvalidOrderError(f"rule order must be positive, got {order}")
    n = order
    i = np.arange(1, n + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for iteration in range(NEWTON_MAX_ITERATIONS):
        p, p_prev = _legendre(n, x)
        dp = n * (x * p - p_prev) / (x * x - 1.0)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) <= NEWTON_TOLERANCE:
            break
    else:
        logger.debug(
            "newton_not_converged: order=%s, last_step=%s",
            n,
            float(np.max(np.abs(step))),
        )
    logger.debug("legendre_roots: order=%s, iterations=%s", n, iteration)

    p, p_prev = _legendre(n, x)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    weights = 2.0 / ((1.0 - x * x) * dp * dp)

    order_idx = np.argsort(x)
    x, weights = x[order_idx], weights[order_idx]
    x = 0.5 * (x - x[::-1])
    weights = 0.5 * (weights + weights[::-1])
    x.setflags(write=False)
    weights.setflags(write=False)
    return QuadRule(nodes=x, weights=weights, order=n)


@dataclass(frozen=True)
class PanelPartition:
    """
    Interior breakpoints splitting an interval into smooth panels.

    Attributes:
        breakpoints: Sorted points strictly inside the interval
    """

    breakpoints: tuple[float, ...] = ()

    @classmethod
    def around(
        cls,
        domain: Interval,
        points: Iterable[float],
        grading: int = DEFAULT_GRADING_LEVELS,
        ratio: float = DEFAULT_GRADING_RATIO,
    ) -> "PanelPartition":
        """
        Breakpoints at every interior point, plus `grading` geometric
        levels c +/- d * ratio^j on each side of it, d being the
        distance from c to the domain end on that side.
        """
        if not 0.0 < ratio < 1.0:
            raise InvalidPartitionError(
                f"grading ratio must lie in (0, 1), got {ratio}"
            )
        found: set[float] = set()
        for c in points:
            c = float(c)
            if domain.lo < c < domain.hi:
                found.add(c)
            for j in range(1, grading + 1):
                for end in (domain.lo, domain.hi):
                    if domain.lo <= c <= domain.hi:
                        b = c + (end - c) * ratio**j
                        if domain.lo < b < domain.hi and b != c:
                            found.add(b)
        return cls(tuple(sorted(found)))

    def panels(self, domain: Interval) -> list[tuple[float, float]]:
        """Consecutive (lo, hi) pairs covering the domain."""
        edges = [domain.lo, *self.breakpoints, domain.hi]
        for b in self.breakpoints:
            if not domain.lo < b < domain.hi:
                raise InvalidPartitionError(
                    f"breakpoint {b} is not strictly inside "
                    f"{domain.to_list()}"
                )
        if any(b <= a for a, b in zip(edges, edges[1:])):
            raise InvalidPartitionError("breakpoints must be increasing")
        return list(zip(edges, edges[1:]))


def composite_rule(
    domain: Interval,
    partition: PanelPartition,
    order_per_panel: int = DEFAULT_ORDER_PER_PANEL,
) -> list[tuple[np.ndarray, np.ndarray]]:
    """Mapped (nodes, weights) for every panel, in panel order."""
    rule = gauss_legendre(order_per_panel)
    return [rule.mapped(lo, hi) for lo, hi in partition.panels(domain)]


def _difference(f: RealFn, g: RealFn, x: np.ndarray) -> np.ndarray:
    fx = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    gx = np.broadcast_to(np.asarray(g(x), dtype=float), x.shape)
    diff = fx - gx
    bad = ~np.isfinite(diff)
    if np.any(bad):
        raise NonFiniteIntegrandError(float(x[np.argmax(bad)]))
    return diff


def integrate(
    f: RealFn,
    domain: Interval,
    partition: PanelPartition = PanelPartition(),
    order_per_panel: int = DEFAULT_ORDER_PER_PANEL,
) -> float:
    """Integral of a vectorized callable over the domain."""
    total = 0.0
    for x, w in composite_rule(domain, partition, order_per_panel):
        fx = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
        bad = ~np.isfinite(fx)
        if np.any(bad):
            raise NonFiniteIntegrandError(float(x[np.argmax(bad)]))
        total += float(np.dot(w, fx))
    return total


def lp_error(
    f: RealFn,
    g: RealFn,
    p: float,
    domain: Interval,
    partition: PanelPartition = PanelPartition(),
    order_per_panel: int = DEFAULT_ORDER_PER_PANEL,
) -> float:
    """
    (sum over panels of the integral of |f - g|^p)^(1/p).

    Both callables must accept numpy arrays. Panels are reduced in order
    so the result does not depend on how they were computed.

    Raises:
        InvalidOrderError: If p <= 0
        NonFiniteIntegrandError: If f - g is not finite at a node
    """
    if not p > 0:
        raise InvalidOrderError(f"exponent p must be positive, got {p}")
    panel_sums = []
    for x, w in composite_rule(domain, partition, order_per_panel):
        diff = _difference(f, g, x)
        panel_sums.append(float(np.dot(w, np.abs(diff) ** p)))
    total = math.fsum(panel_sums)
    return total ** (1.0 / p)


def sup_error(
    f: RealFn, g: RealFn, domain: Interval, grid_size: int
) -> float:
    """Max |f - g| over a uniform grid including the endpoints."""
    if grid_size < 2:
        raise InvalidOrderError(f"grid size must be >= 2, got {grid_size}")
    x = domain.linspace(grid_size)
    return float(np.max(np.abs(_difference(f, g, x))))
