"""
The coupled division-free iteration for fractional powers.

For t in [0, 1] and an exponent r/s,

    y_{k+1} = y_k (2 - s g_k^{s-1} y_k)
    g_{k+1} = g_k - y_{k+1} (g_k^s - t)

with g_0 = 1 and y_0 = 1/s drives g_k to t^(1/s) and y_k to the
reciprocal of s g^{s-1}. Both updates use additions and multiplications
only, so g_k is a polynomial in t and phi_k(t) = g_k(t)^r approximates
t^(r/s). The production path (inner_step, phi) never divides and never
calls pow; oracle powers appear only in trace and error diagnostics.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from .exceptions import InvalidExponentError, OutOfUnitIntervalError
from .opcount import plain

logger = logging.getLogger(__name__)

# Roundoff slack accepted around [0, 1]
UNIT_SLACK = 1e-12


@dataclass(frozen=True)
class Exponent:
    """
    A rational exponent alpha = r/s in (0, 1), stored in lowest terms.

    Attributes:
        r: Numerator, 0 < r < s
        s: Denominator, s >= 2
    """

    r: int
    s: int

    def __post_init__(self) -> None:
        r, s = int(self.r), int(self.s)
        if r != self.r or s != self.s:
            raise InvalidExponentError(
                f"exponent parts must be integers, got {self.r}/{self.s}"
            )
        if not 0 < r < s:
            raise InvalidExponentError(
                f"exponent must satisfy 0 < r < s, got {r}/{s}"
            )
        d = math.gcd(r, s)
        object.__setattr__(self, "r", r // d)
        object.__setattr__(self, "s", s // d)

    @property
    def alpha(self) -> float:
        return self.r / self.s

    @cached_property
    def inv_s(self) -> float:
        return 1.0 / self.s

    def __str__(self) -> str:
        return f"{self.r}/{self.s}"

    def to_dict(self) -> dict:
        return {"r": self.r, "s": self.s}

    @classmethod
    def from_dict(cls, data: dict) -> "Exponent":
        return cls(r=data["r"], s=data["s"])


@dataclass(frozen=True, eq=False)
class InnerState:
    """
    State (g_k, y_k) of the iteration after k steps.

    g and y are floats, arrays (one entry per t) or instrumented scalars.
    """

    g: Any
    y: Any
    k: int = 0

    @classmethod
    def initial(cls, t: Any, exp: Exponent) -> "InnerState":
        """The starting state g_0 = 1, y_0 = 1/s, shaped like t."""
        if isinstance(t, np.ndarray):
            ones = np.ones_like(t, dtype=float)
            return cls(g=ones, y=ones * exp.inv_s, k=0)
        return cls(g=1.0, y=exp.inv_s, k=0)


def ipow(x: Any, n: int) -> Any:
    """x**n for an integer n >= 1 by repeated squaring."""
    if n < 1:
        raise ValueError(f"ipow needs a positive exponent, got {n}")
    result = None
    base = x
    while True:
        if n & 1:
            result = base if result is None else result * base
        n >>= 1
        if not n:
            return result
        base = base * base


def _check_unit(t: Any) -> None:
    values = np.asarray(plain(t), dtype=float)
    bad = ~((values >= -UNIT_SLACK) & (values <= 1.0 + UNIT_SLACK))
    if np.any(bad):
        raise OutOfUnitIntervalError(float(values[bad].flat[0]))


def _step(state: InnerState, t: Any, exp: Exponent) -> InnerState:
    g, y = state.g, state.y
    g_pow = ipow(g, exp.s - 1)
    y_next = y * (2.0 - exp.s * g_pow * y)
    g_next = g - y_next * (g_pow * g - t)
    return InnerState(g=g_next, y=y_next, k=state.k + 1)


def inner_step(state: InnerState, t: Any, exp: Exponent) -> InnerState:
    """
    Advance the iteration one step.

    Args:
        state: Current (g_k, y_k)
        t: Argument(s) in [0, 1]
        exp: Exponent r/s; only s enters the update

    Returns:
        The state (g_{k+1}, y_{k+1})

    Raises:
        OutOfUnitIntervalError: If t is outside [0, 1]
    """
    _check_unit(t)
    return _step(state, t, exp)


def iterate(t: Any, exp: Exponent, k: int) -> InnerState:
    """Run exactly k steps from the initial state."""
    if k < 0:
        raise ValueError(f"step count must be non-negative, got {k}")
    _check_unit(t)
    state = InnerState.initial(t, exp)
    for _ in range(k):
        state = _step(state, t, exp)
    return state


def phi(t: Any, exp: Exponent, k: int) -> Any:
    """
    phi_k(t) = g_k(t)^r, the division-free approximation of t^(r/s).

    Exactly k steps always run; there is no early stopping.
    """
    return ipow(iterate(t, exp, k).g, exp.r)


@dataclass(frozen=True)
class TraceRow:
    k: int
    g: float
    y: float
    delta: float
    e: float


@dataclass(frozen=True)
class InnerTrace:
    """
    Per-step record of the iteration at a single t.

    Attributes:
        t: The argument
        exp: The exponent
        rows: (k, g_k, y_k, delta_k, e_k) for k = 0..k_max, where
            delta_k = 1 - s g_k^{s-1} y_k and e_k = g_k - t^(1/s)
    """

    t: float
    exp: Exponent
    rows: tuple[TraceRow, ...] = field(default_factory=tuple)

    @property
    def root(self) -> float:
        return max(self.t, 0.0) ** (1.0 / self.exp.s)

    def identity_residuals(self) -> list[float]:
        """
        (1 - s g_k^{s-1} y_{k+1}) - (1 - s g_k^{s-1} y_k)^2 per step;
        zero up to roundoff.
        """
        s = self.exp.s
        residuals = []
        for cur, nxt in zip(self.rows, self.rows[1:]):
            lhs = 1.0 - s * cur.g ** (s - 1) * nxt.y
            residuals.append(lhs - cur.delta**2)
        return residuals

    def squeeze_violations(
        self, lower_tol: float = 1e-12, step_tol: float = 1e-15
    ) -> list[int]:
        """
        Steps k breaking t^(1/s) <= g_{k+1} <= g_k <= 1 or
        0 < s g_k^{s-1} y_k < 2.
        """
        s = self.exp.s
        u = self.root
        bad = []
        for cur, nxt in zip(self.rows, self.rows[1:]):
            if not (
                u - lower_tol <= nxt.g <= cur.g + step_tol <= 1 + step_tol
            ):
                bad.append(cur.k)
                continue
            z = s * cur.g ** (s - 1) * cur.y
            if cur.g > 0 and not 0 < z < 2 + lower_tol:
                bad.append(cur.k)
        return bad

    def quadratic_constant(self, basin: float = 0.1) -> float | None:
        """
        Largest |e_{k+1}| / |e_k|^2 once |e_k| <= basin, ignoring steps
        already at roundoff level. None if the basin is never reached.
        """
        ratios = []
        for cur, nxt in zip(self.rows, self.rows[1:]):
            if abs(cur.e) <= basin and abs(cur.e) > 1e-7:
                ratios.append(abs(nxt.e) / cur.e**2)
        return max(ratios) if ratios else None

    def to_records(self) -> list[dict]:
        return [
            {"k": r.k, "g": r.g, "y": r.y, "delta": r.delta, "e": r.e}
            for r in self.rows
        ]


def trace(t: float, exp: Exponent, k_max: int) -> InnerTrace:
    """Run k_max steps at a scalar t, recording every state."""
    t = float(t)
    _check_unit(t)
    u = max(t, 0.0) ** (1.0 / exp.s)
    state = InnerState.initial(t, exp)
    rows = []
    for _ in range(k_max + 1):
        delta = 1.0 - exp.s * ipow(state.g, exp.s - 1) * state.y
        rows.append(
            TraceRow(
                k=state.k, g=state.g, y=state.y, delta=delta, e=state.g - u
            )
        )
        state = _step(state, t, exp)
    return InnerTrace(t=t, exp=exp, rows=tuple(rows))


def sup_phi_error(exp: Exponent, k: int, tau: float, grid: int) -> float:
    """
    max |phi_k(t) - t^alpha| over `grid` uniform points of [tau, 1].
    """
    if not 0.0 < tau <= 1.0:
        raise ValueError(f"tau must lie in (0, 1], got {tau}")
    if grid < 1:
        raise ValueError(f"grid must be positive, got {grid}")
    t = np.linspace(tau, 1.0, grid)
    return float(np.max(np.abs(phi(t, exp, k) - t**exp.alpha)))


def basin_entry(
    exp: Exponent, tau: float, eta: float, k_max: int, grid: int = 1001
) -> int | None:
    """
    First k with sup over [tau, 1] of |g_k - t^(1/s)| <= eta, measured
    on a grid. None if not reached within k_max steps.
    """
    t = np.linspace(tau, 1.0, grid)
    u = t ** (1.0 / exp.s)
    state = InnerState.initial(t, exp)
    for k in range(k_max + 1):
        if float(np.max(np.abs(state.g - u))) <= eta:
            logger.debug(
                "basin_entry: exponent=%s, tau=%s, eta=%s, k=%s",
                exp,
                tau,
                eta,
                k,
            )
            return k
        state = _step(state, t, exp)
    return None
