"""
Level fields on a uniform grid over [-1, 1]^2 and their L^2 distances.
"""

import enum
import logging

import numpy as np

from src.models import GridSpec, StarParams

from .profile import RadialProfile, level_fn

logger = logging.getLogger(__name__)


class Normalization(str, enum.Enum):
    """area: sqrt((4 / n^2) sum diff^2); rms: sqrt((1 / n^2) sum diff^2)."""

    AREA = "area"
    RMS = "rms"


def grid_points(grid: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Row-major meshgrid: rows follow y, columns follow x."""
    axis = np.linspace(-1.0, 1.0, grid.n)
    x, y = np.meshgrid(axis, axis, indexing="xy")
    return x, y


def level_field(
    params: StarParams, rprofile: RadialProfile, grid: GridSpec
) -> np.ndarray:
    x, y = grid_points(grid)
    return level_fn(x, y, params, rprofile)


def grid_l2_distance(
    field_a: np.ndarray,
    field_b: np.ndarray,
    normalization: Normalization | str = Normalization.AREA,
) -> float:
    """Discrete L^2 distance between two n x n fields."""
    normalization = Normalization(normalization)
    n = field_a.shape[0]
    diff = np.asarray(field_a) - np.asarray(field_b)
    # Row sums first, then rows in order
    total = float(np.sum(np.sum(diff * diff, axis=1)))
    weight = 4.0 if normalization is Normalization.AREA else 1.0
    return float(np.sqrt(weight * total / (n * n)))


def grid_l2_error(
    params: StarParams,
    rprofile_a: RadialProfile,
    rprofile_b: RadialProfile,
    grid: GridSpec,
    normalization: Normalization | str = Normalization.AREA,
) -> float:
    """
    L^2 distance between the level functions of two radial profiles.
    """
    field_a = level_field(params, rprofile_a, grid)
    field_b = level_field(params, rprofile_b, grid)
    error = grid_l2_distance(field_a, field_b, normalization)
    logger.debug(
        "grid_l2_error: n=%s, normalization=%s, error=%s",
        grid.n,
        Normalization(normalization).value,
        error,
    )
    return error


def grid_field(
    params: StarParams,
    profiles: dict[str, RadialProfile],
    grid: GridSpec,
) -> dict[str, np.ndarray]:
    """
    Flattened x, y and one level field per named profile, row-major.
    """
    x, y = grid_points(grid)
    columns = {"x": x.ravel(), "y": y.ravel()}
    for name, profile in profiles.items():
        columns[name] = level_fn(x, y, params, profile).ravel()
    return columns
