"""
Star-shaped level-set configurations.
"""

import json
from dataclasses import dataclass

from src.libs.rootiter import Exponent


class StarConfigError(ValueError):
    """Raised when a star configuration breaks its invariants."""

    pass


@dataclass(frozen=True)
class StarTip:
    """
    One angular cusp W exp(-lambda |theta - theta_j|^alpha).

    Attributes:
        theta: Tip angle in (-pi, pi]
        weight: Amplitude W > 0
        decay: Decay rate lambda > 0
        exponent: alpha = r/s
    """

    theta: float
    weight: float
    decay: float
    exponent: Exponent

    def __post_init__(self) -> None:
        # weight 0 is accepted to express a flat profile
        if self.weight < 0 or self.decay <= 0:
            raise StarConfigError(
                f"tip needs weight >= 0 and decay > 0, got "
                f"W={self.weight}, lambda={self.decay}"
            )

    def to_dict(self) -> dict:
        return {
            "theta": self.theta,
            "weight": self.weight,
            "decay": self.decay,
            "r": self.exponent.r,
            "s": self.exponent.s,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "StarTip":
        return cls(
            theta=float(data["theta"]),
            weight=float(data["weight"]),
            decay=float(data["decay"]),
            exponent=Exponent(data["r"], data["s"]),
        )


@dataclass(frozen=True)
class StarParams:
    """
    Radial profile R(theta) = R0 + sum_j W_j exp(-lambda_j d_j^alpha_j)
    and level function tanh(sharpness (R(theta) - r)).

    The star should fit inside the unit square; this is not enforced.

    Attributes:
        r0: Base radius
        tips: At least one tip
        sharpness: Level-set sharpness gamma
    """

    r0: float
    tips: tuple[StarTip, ...]
    sharpness: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "tips", tuple(self.tips))
        if self.r0 <= 0:
            raise StarConfigError(f"base radius must be positive: {self.r0}")
        if not self.tips:
            raise StarConfigError("a star needs at least one tip")
        if self.sharpness <= 0:
            raise StarConfigError(
                f"sharpness must be positive: {self.sharpness}"
            )

    @property
    def max_radius(self) -> float:
        return self.r0 + sum(tip.weight for tip in self.tips)

    def to_dict(self) -> dict:
        return {
            "r0": self.r0,
            "sharpness": self.sharpness,
            "tips": [tip.to_dict() for tip in self.tips],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "StarParams":
        return cls(
            r0=float(data["r0"]),
            tips=tuple(StarTip.from_dict(t) for t in data["tips"]),
            sharpness=float(data["sharpness"]),
        )

    @classmethod
    def from_json(cls, json_str: str) -> "StarParams":
        return cls.from_dict(json.loads(json_str))


@dataclass(frozen=True)
class GridSpec:
    """An n x n uniform grid over [-1, 1]^2, endpoints included."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise StarConfigError(f"grid needs n >= 2, got {self.n}")
