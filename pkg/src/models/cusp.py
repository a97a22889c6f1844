"""
The cusp function class: an analytic background plus finitely many
terms h_j(|x - a_j|^alpha_j) on [-1, 1].
"""

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from src.libs.chebyshev import SYMMETRIC, Interval
from src.libs.rootiter import Exponent

from .analytic import AnalyticFn


class InvalidCuspFunctionError(ValueError):
    """Raised when a cusp term or cusp function breaks its invariants."""

    pass


@dataclass(frozen=True)
class CuspTerm:
    """
    One term h(|x - a|^alpha).

    Attributes:
        a: Cusp location in [-1, 1]
        exponent: alpha = r/s
        envelope: The analytic function h
        dmax_override: Optional distance normalizer, at least 1 + |a|
    """

    a: float
    exponent: Exponent
    envelope: AnalyticFn = field(default_factory=AnalyticFn.identity)
    dmax_override: float | None = None

    def __post_init__(self) -> None:
        if not -1.0 <= self.a <= 1.0:
            raise InvalidCuspFunctionError(
                f"cusp location must lie in [-1, 1], got {self.a}"
            )
        if self.dmax_override is not None and (
            self.dmax_override < 1.0 + abs(self.a)
        ):
            raise InvalidCuspFunctionError(
                f"dmax {self.dmax_override} is smaller than the largest "
                f"distance {1.0 + abs(self.a)}"
            )
        if not self.envelope.is_analytic_on(Interval(0.0, self.scale_pow)):
            raise InvalidCuspFunctionError(
                f"envelope {self.envelope} is singular on "
                f"[0, {self.scale_pow}]"
            )

    @property
    def dmax(self) -> float:
        """max(|-1 - a|, |1 - a|) unless overridden."""
        if self.dmax_override is not None:
            return float(self.dmax_override)
        return max(abs(-1.0 - self.a), abs(1.0 - self.a))

    @cached_property
    def inv_dmax(self) -> float:
        return 1.0 / self.dmax

    @property
    def scale_pow(self) -> float:
        return self.dmax**self.exponent.alpha

    def rescaled_envelope(self, u: Any) -> Any:
        """h(dmax^alpha u), the outer target on [0, 1]."""
        return self.envelope(self.scale_pow * np.asarray(u, dtype=float))

    def __call__(self, x: Any) -> Any:
        """Exact value h(|x - a|^alpha), using the library power."""
        d = np.abs(np.asarray(x, dtype=float) - self.a)
        return self.envelope(d**self.exponent.alpha)

    def to_dict(self) -> dict:
        data = {
            "a": self.a,
            "r": self.exponent.r,
            "s": self.exponent.s,
            "envelope": self.envelope.to_dict(),
        }
        if self.dmax_override is not None:
            data["dmax"] = self.dmax_override
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "CuspTerm":
        envelope = data.get("envelope")
        return cls(
            a=float(data["a"]),
            exponent=Exponent(data["r"], data["s"]),
            envelope=(
                AnalyticFn.from_dict(envelope)
                if envelope is not None
                else AnalyticFn.identity()
            ),
            dmax_override=data.get("dmax"),
        )


@dataclass(frozen=True)
class CuspFunction:
    """
    f(x) = H(x) + sum_j h_j(|x - a_j|^alpha_j) on [-1, 1].

    Attributes:
        background: The analytic background H
        terms: Cusp terms with distinct locations
    """

    background: AnalyticFn = field(default_factory=AnalyticFn.zero)
    terms: tuple[CuspTerm, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        locations = [term.a for term in self.terms]
        if len(set(locations)) != len(locations):
            raise InvalidCuspFunctionError(
                f"cusp locations must be distinct, got {locations}"
            )
        if not self.background.is_analytic_on(SYMMETRIC):
            raise InvalidCuspFunctionError(
                f"background {self.background} is singular on [-1, 1]"
            )

    @property
    def cusp_locations(self) -> list[float]:
        return [term.a for term in self.terms]

    def __call__(self, x: Any) -> Any:
        total = self.background(x)
        for term in self.terms:
            total = total + term(x)
        return total

    def to_dict(self) -> dict:
        """
        Convert to the JSON document layout.

        Returns:
            {"background": {...}, "terms": [{"a", "r", "s", "envelope"}]}
        """
        return {
            "background": self.background.to_dict(),
            "terms": [term.to_dict() for term in self.terms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CuspFunction":
        background = data.get("background")
        return cls(
            background=(
                AnalyticFn.from_dict(background)
                if background is not None
                else AnalyticFn.zero()
            ),
            terms=tuple(CuspTerm.from_dict(t) for t in data.get("terms", [])),
        )

    @classmethod
    def from_json(cls, json_str: str) -> "CuspFunction":
        return cls.from_dict(json.loads(json_str))


def single_cusp(a: float = 0.2, r: int = 1, s: int = 3) -> CuspFunction:
    """|x - a|^(r/s) with zero background and identity envelope."""
    return CuspFunction(terms=(CuspTerm(a, Exponent(r, s)),))


def multi_cusp() -> CuspFunction:
    """Three cusps at distinct locations and exponents."""
    return CuspFunction(
        terms=(
            CuspTerm(-0.6, Exponent(1, 2)),
            CuspTerm(0.2, Exponent(1, 3)),
            CuspTerm(0.7, Exponent(2, 5)),
        )
    )


def analytic_envelope() -> CuspFunction:
    """cos(2x) + exp(|x - 0.2|^(1/3))."""
    return CuspFunction(
        background=AnalyticFn.cos(frequency=2.0),
        terms=(CuspTerm(0.2, Exponent(1, 3), AnalyticFn.exp()),),
    )


PRESETS = {
    "single": single_cusp,
    "multi": multi_cusp,
    "analytic": analytic_envelope,
}
