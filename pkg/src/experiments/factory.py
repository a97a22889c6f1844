"""Configuration loading and runner creation for the experiment CLI."""

import json
import logging
from pathlib import Path
from typing import Any, Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from src.config import (
    CUSP_1D,
    DEFAULT_GAMMA,
    DEFAULT_GRADING_LEVELS,
    DEFAULT_K,
    DEFAULT_K_MAX,
    DEFAULT_K_MIN,
    DEFAULT_M,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_P,
    DEFAULT_QUAD_ORDER,
    DIAGNOSTIC_K_MAX,
    DIAGNOSTIC_S_VALUES,
    DIAGNOSTIC_T_GRID,
    EXPERIMENT_IDS,
    INNER_DIAGNOSTICS,
    MULTI_CUSP_1D,
    STAR2D_SYMMETRIC,
    STAR2D_UNEVEN,
    SWEEP_N,
    SYMMETRIC_STAR,
    UNEVEN_STAR,
)
from src.models import CountConvention

from .exceptions import ConfigError

logger = logging.getLogger(__name__)

Experiment = Literal[
    "inner-diagnostics",
    "cusp1d",
    "multicusp1d",
    "sweep-n",
    "star2d-symmetric",
    "star2d-uneven",
]

# Values filled in when a run leaves them unset
_EXPERIMENT_DEFAULTS = {
    INNER_DIAGNOSTICS: {"k": DIAGNOSTIC_K_MAX},
    STAR2D_SYMMETRIC: {
        "m": SYMMETRIC_STAR["m"],
        "k": SYMMETRIC_STAR["k"],
        "grid": SYMMETRIC_STAR["grid"],
    },
    STAR2D_UNEVEN: {
        "m": UNEVEN_STAR["m"],
        "k": UNEVEN_STAR["k"],
        "grid": UNEVEN_STAR["grid"],
    },
}


class ExperimentConfig(BaseModel):
    """Fully resolved settings of one experiment run."""

    model_config = ConfigDict(extra="forbid")

    experiment: Experiment
    m: int | None = Field(None, ge=0, description="Outer degree")
    k: int | None = Field(None, ge=0, description="Inner depth")
    k_min: int = Field(DEFAULT_K_MIN, ge=0)
    k_max: int = Field(DEFAULT_K_MAX, ge=0)
    gamma: float = Field(float(DEFAULT_GAMMA), gt=0)
    p: float = Field(DEFAULT_P, gt=0, description="Error exponent")
    quad_order: int = Field(DEFAULT_QUAD_ORDER, ge=1)
    grading: int = Field(DEFAULT_GRADING_LEVELS, ge=0)
    grid: int | None = Field(None, ge=2)
    seed: int = UNEVEN_STAR["seed"]
    t_grid: list[float] = Field(
        default_factory=lambda: list(DIAGNOSTIC_T_GRID), min_length=1
    )
    s_values: list[int] = Field(
        default_factory=lambda: list(DIAGNOSTIC_S_VALUES), min_length=1
    )
    preset: Literal["single", "multi", "analytic"] = "single"
    function: Path | None = None
    star: Path | None = None
    count_convention: CountConvention = CountConvention.INNER_OUTER
    inner_coeffs: int = Field(1, ge=1, le=2)
    refit: bool = False
    write_grid: bool = True
    out: Path = Path(DEFAULT_OUTPUT_DIR)

    @field_validator("t_grid")
    @classmethod
    def _t_in_unit_interval(cls, values: list[float]) -> list[float]:
        for t in values:
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"t values must lie in [0, 1], got {t}")
        return values

    @field_validator("s_values")
    @classmethod
    def _s_at_least_two(cls, values: list[int]) -> list[int]:
        for s in values:
            if s < 2:
                raise ValueError(f"s values must be >= 2, got {s}")
        return values

    @model_validator(mode="after")
    def _resolve_defaults(self) -> "ExperimentConfig":
        if self.k_min > self.k_max:
            raise ValueError(
                f"k_min ({self.k_min}) must not exceed k_max ({self.k_max})"
            )
        defaults = {
            "m": DEFAULT_M,
            "k": DEFAULT_K,
            **_EXPERIMENT_DEFAULTS.get(self.experiment, {}),
        }
        for name, value in defaults.items():
            if getattr(self, name) is None:
                setattr(self, name, value)
        return self


def resolve_experiment(
    command: str, preset: str | None = None, variant: str | None = None
) -> str:
    """Map a CLI subcommand onto an experiment id."""
    if command == "diagnose":
        return INNER_DIAGNOSTICS
    if command == "cusp1d":
        return MULTI_CUSP_1D if preset == "multi" else CUSP_1D
    if command == "sweep":
        return SWEEP_N
    if command == "star2d":
        return STAR2D_UNEVEN if variant == "uneven" else STAR2D_SYMMETRIC
    raise ConfigError(f"unknown command: {command}")


def load_config_file(path: Path) -> dict[str, Any]:
    """Read a JSON object of ExperimentConfig fields."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file {path} is not JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return data


def load_config(
    overrides: dict[str, Any], config_path: Path | None = None
) -> ExperimentConfig:
    """
    Merge a JSON config file with explicit flag values.

    Args:
        overrides: Flag values; None means "not given"
        config_path: Optional JSON file, read first

    Returns:
        Validated configuration

    Raises:
        ConfigError: If the file is unreadable or validation fails
    """
    data = load_config_file(config_path) if config_path else {}
    data.update({k: v for k, v in overrides.items() if v is not None})
    if data.get("experiment") not in EXPERIMENT_IDS:
        raise ConfigError(f"unknown experiment: {data.get('experiment')}")
    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(str(e)) from e
    logger.info(
        "config_resolved: experiment=%s, out=%s",
        config.experiment,
        config.out,
    )
    return config


def create_runner(config: ExperimentConfig):
    """Create an ExperimentRunner for the configuration."""
    from .runner import ExperimentRunner

    return ExperimentRunner(config)
