"""Convergence-rate fits for sweep results."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class LogLinearFit:
    """log(error) ~ intercept + slope * x."""

    slope: float
    intercept: float
    r_squared: float


def log_linear_fit(
    xs: Sequence[float], errors: Sequence[float], floor: float = 0.0
) -> LogLinearFit:
    """
    Least-squares line through (x, log error), skipping errors at or
    below `floor`.

    Raises:
        ValueError: If fewer than two points remain
    """
    xs = np.asarray(xs, dtype=float)
    errors = np.asarray(errors, dtype=float)
    keep = errors > floor
    if np.count_nonzero(keep) < 2:
        raise ValueError("a log-linear fit needs at least two points")
    x, y = xs[keep], np.log(errors[keep])
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (intercept + slope * x)
    spread = np.sum((y - y.mean()) ** 2)
    r_squared = 1.0 - np.sum(residual**2) / spread if spread > 0 else 1.0
    return LogLinearFit(float(slope), float(intercept), float(r_squared))
