"""
Catalog of analytic functions used as backgrounds and cusp envelopes.
"""

import enum
import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.polynomial import polynomial as nppoly

from src.libs.chebyshev import Interval


class AnalyticKind(str, enum.Enum):
    """Catalog entries, all analytic near any real interval they accept."""

    CONSTANT = "constant"
    POLYNOMIAL = "polynomial"
    EXP = "exp"
    COS = "cos"
    SIN = "sin"
    LOGISTIC = "logistic"
    SHIFTED_RECIPROCAL = "shifted_reciprocal"


# Parameter names and defaults per kind
_PARAMETERS: dict[AnalyticKind, dict[str, Any]] = {
    AnalyticKind.CONSTANT: {"value": 0.0},
    AnalyticKind.POLYNOMIAL: {"coeffs": [0.0, 1.0]},
    AnalyticKind.EXP: {"amplitude": 1.0, "rate": 1.0},
    AnalyticKind.COS: {"amplitude": 1.0, "frequency": 1.0, "phase": 0.0},
    AnalyticKind.SIN: {"amplitude": 1.0, "frequency": 1.0, "phase": 0.0},
    AnalyticKind.LOGISTIC: {"amplitude": 1.0, "rate": 1.0, "center": 0.0},
    AnalyticKind.SHIFTED_RECIPROCAL: {"amplitude": 1.0, "shift": 2.0},
}


@dataclass(frozen=True)
class AnalyticFn:
    """
    A catalog function with its parameters.

    Attributes:
        kind: Which catalog entry
        params: Parameter values; missing ones take the catalog default

    Monomial coefficients of a polynomial are given in ascending order.
    The shifted reciprocal is amplitude / (u + shift).
    """

    kind: AnalyticKind
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        kind = AnalyticKind(self.kind)
        defaults = _PARAMETERS[kind]
        unknown = set(self.params) - set(defaults)
        if unknown:
            raise ValueError(
                f"unknown parameters for {kind.value}: {sorted(unknown)}"
            )
        merged = {**defaults, **self.params}
        if kind is AnalyticKind.POLYNOMIAL:
            merged["coeffs"] = [float(c) for c in merged["coeffs"]]
            if not merged["coeffs"]:
                raise ValueError("polynomial needs at least one coefficient")
        else:
            merged = {name: float(v) for name, v in merged.items()}
        if kind is AnalyticKind.SHIFTED_RECIPROCAL and merged["shift"] <= 0:
            raise ValueError("shifted reciprocal needs a positive shift")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", merged)

    @classmethod
    def constant(cls, value: float) -> "AnalyticFn":
        return cls(AnalyticKind.CONSTANT, {"value": value})

    @classmethod
    def zero(cls) -> "AnalyticFn":
        return cls.constant(0.0)

    @classmethod
    def polynomial(cls, coeffs: list[float]) -> "AnalyticFn":
        return cls(AnalyticKind.POLYNOMIAL, {"coeffs": list(coeffs)})

    @classmethod
    def identity(cls) -> "AnalyticFn":
        return cls.polynomial([0.0, 1.0])

    @classmethod
    def exp(cls, amplitude: float = 1.0, rate: float = 1.0) -> "AnalyticFn":
        return cls(AnalyticKind.EXP, {"amplitude": amplitude, "rate": rate})

    @classmethod
    def cos(
        cls, amplitude: float = 1.0, frequency: float = 1.0, phase=0.0
    ) -> "AnalyticFn":
        return cls(
            AnalyticKind.COS,
            {"amplitude": amplitude, "frequency": frequency, "phase": phase},
        )

    def is_analytic_on(self, interval: Interval) -> bool:
        """Whether the function is finite and smooth on the interval."""
        if self.kind is AnalyticKind.SHIFTED_RECIPROCAL:
            return interval.lo + self.params["shift"] > 0
        return True

    def __call__(self, u: Any) -> Any:
        p = self.params
        u = np.asarray(u, dtype=float)
        if self.kind is AnalyticKind.CONSTANT:
            out = np.full_like(u, p["value"])
        elif self.kind is AnalyticKind.POLYNOMIAL:
            out = nppoly.polyval(u, p["coeffs"]) + np.zeros_like(u)
        elif self.kind is AnalyticKind.EXP:
            out = p["amplitude"] * np.exp(p["rate"] * u)
        elif self.kind is AnalyticKind.COS:
            out = p["amplitude"] * np.cos(p["frequency"] * u + p["phase"])
        elif self.kind is AnalyticKind.SIN:
            out = p["amplitude"] * np.sin(p["frequency"] * u + p["phase"])
        elif self.kind is AnalyticKind.LOGISTIC:
            out = p["amplitude"] / (
                1.0 + np.exp(-p["rate"] * (u - p["center"]))
            )
        else:
            out = p["amplitude"] / (u + p["shift"])
        return float(out) if out.ndim == 0 else out

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, **self.params}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "AnalyticFn":
        """
        Create an AnalyticFn from a dictionary.

        Args:
            data: {"kind": ..., <parameter>: <value>, ...}

        Returns:
            New AnalyticFn instance
        """
        params = {k: v for k, v in data.items() if k != "kind"}
        return cls(AnalyticKind(data["kind"]), params)

    @classmethod
    def from_json(cls, json_str: str) -> "AnalyticFn":
        return cls.from_dict(json.loads(json_str))

    def __str__(self) -> str:
        args = ", ".join(
            f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}"
            for k, v in self.params.items()
        )
        return f"{self.kind.value}({args})"
