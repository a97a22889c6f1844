"""
Composite and single-layer approximations of the star radial profile.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from src.composite import CuspLayer
from src.libs.chebyshev import UNIT, ChebPoly, Interval, cheb_interpolate
from src.models import CountConvention, ParamCount, StarParams, StarTip

from .profile import r_star, wrapped_distance

logger = logging.getLogger(__name__)

ANGLE_DOMAIN = Interval(-math.pi, math.pi)
INV_PI = 1.0 / math.pi


def _envelope(tip: StarTip):
    """u -> W exp(-lambda pi^alpha u), so that u = (d / pi)^alpha."""
    rate = tip.decay * math.pi**tip.exponent.alpha

    def envelope(u: float) -> float:
        return tip.weight * math.exp(-rate * u)

    return envelope


@dataclass(frozen=True)
class RadialApproximant:
    """
    R0 + sum_j P_{m,j}(phi_k(d(theta, theta_j) / pi)).

    Attributes:
        r0: Base radius
        layers: One CuspLayer per tip, located at theta_j with dmax = pi
        m: Outer degree
        k: Inner depth
    """

    r0: float
    layers: tuple[CuspLayer, ...]
    m: int
    k: int

    def __call__(self, theta: Any) -> Any:
        theta = np.asarray(theta, dtype=float)
        total = np.full_like(theta, self.r0)
        for layer in self.layers:
            t = wrapped_distance(theta, layer.a) * layer.inv_dmax
            total = total + layer.at_distance(t)
        return float(total) if total.ndim == 0 else total

    def param_count(self) -> ParamCount:
        """K (m + 1) outer coefficients."""
        return ParamCount(
            convention=CountConvention.OUTER_ONLY,
            n=len(self.layers) * (self.m + 1),
        )


def approximate_rstar(
    params: StarParams, m: int, k: int
) -> RadialApproximant:
    """
    Fit one outer polynomial per tip to its envelope on [0, 1] and
    compose it with phi_k of the normalized wrapped distance.
    """
    if m < 0 or k < 0:
        raise ValueError(f"degrees must be non-negative, got m={m}, k={k}")
    layers = tuple(
        CuspLayer(
            outer=cheb_interpolate(_envelope(tip), m, UNIT),
            exponent=tip.exponent,
            a=tip.theta,
            dmax=math.pi,
            inv_dmax=INV_PI,
            k=k,
        )
        for tip in params.tips
    )
    logger.debug(
        "radial_approximant_built: tips=%s, m=%s, k=%s", len(layers), m, k
    )
    return RadialApproximant(r0=params.r0, layers=layers, m=m, k=k)


def baseline_rstar(params: StarParams, N: int) -> ChebPoly:
    """Degree N - 1 Chebyshev interpolant of r_star on [-pi, pi]."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return cheb_interpolate(
        lambda theta: r_star(theta, params), N - 1, ANGLE_DOMAIN
    )
