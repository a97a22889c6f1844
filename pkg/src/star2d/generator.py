"""
Seeded generator of uneven stars.
"""

import math
from typing import Sequence

import numpy as np

from src.libs.rootiter import Exponent
from src.models import StarConfigError, StarParams, StarTip

from .profile import TWO_PI


def _wrap_angle(theta: float) -> float:
    """Map an angle into (-pi, pi]."""
    wrapped = math.remainder(theta, TWO_PI)
    return math.pi if wrapped == -math.pi else wrapped


def symmetric_star(
    tips: int,
    r0: float,
    weight: float,
    decay: float,
    exponent: Exponent,
    sharpness: float,
    theta0: float = math.pi / 2,
) -> StarParams:
    """Equally spaced identical tips theta_j = theta0 + 2 pi j / K."""
    return StarParams(
        r0=r0,
        tips=tuple(
            StarTip(
                theta=_wrap_angle(theta0 + TWO_PI * j / tips),
                weight=weight,
                decay=decay,
                exponent=exponent,
            )
            for j in range(tips)
        ),
        sharpness=sharpness,
    )


def _check_range(name: str, bounds: Sequence[float]) -> tuple[float, float]:
    lo, hi = (float(b) for b in bounds)
    if lo > hi:
        raise StarConfigError(f"empty {name} range [{lo}, {hi}]")
    return lo, hi


def make_uneven_star(
    K: int,
    seed: int,
    jitter: float,
    weight_range: Sequence[float],
    decay_range: Sequence[float],
    denominators: Sequence[int] = (2, 3, 4, 5),
    r0: float = 0.45,
    sharpness: float = 25.0,
    theta0: float = math.pi / 2,
) -> StarParams:
    """
    Perturb K uniformly spaced tips and draw their parameters.

    theta_j = theta0 + 2 pi j / K + U(-jitter, jitter); W_j and lambda_j
    are uniform on their ranges; alpha_j = r / s with s drawn from
    `denominators` and r from 1..s-1. Identical seeds give identical
    stars.

    Raises:
        StarConfigError: If a range is empty, no denominators are given
            or jitter would let neighbouring tips cross
    """
    if K < 1:
        raise StarConfigError(f"a star needs K >= 1 tips, got {K}")
    if not 0.0 <= jitter < math.pi / K:
        raise StarConfigError(
            f"jitter must lie in [0, pi/K) = [0, {math.pi / K}), "
            f"got {jitter}"
        )
    w_lo, w_hi = _check_range("weight", weight_range)
    l_lo, l_hi = _check_range("decay", decay_range)
    denominators = [int(s) for s in denominators if int(s) >= 2]
    if not denominators:
        raise StarConfigError("no denominators >= 2 to draw exponents from")

    rng = np.random.default_rng(seed)
    tips = []
    for j in range(K):
        offset = rng.uniform(-jitter, jitter) if jitter > 0 else 0.0
        s = denominators[int(rng.integers(len(denominators)))]
        r = int(rng.integers(1, s))
        tips.append(
            StarTip(
                theta=_wrap_angle(theta0 + TWO_PI * j / K + offset),
                weight=float(rng.uniform(w_lo, w_hi)),
                decay=float(rng.uniform(l_lo, l_hi)),
                exponent=Exponent(r, s),
            )
        )
    return StarParams(r0=r0, tips=tuple(tips), sharpness=sharpness)
