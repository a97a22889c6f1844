"""
Experiment CLI: configuration, runner and CSV output.

Usage:
    $ python -m src.experiments.main sweep --k-min 2 --k-max 16
    $ python -m src.experiments.main star2d --variant uneven --out results
"""

from .exceptions import (
    ConfigError,
    ExperimentError,
    InvariantViolation,
    OutputError,
)
from .factory import (
    ExperimentConfig,
    create_runner,
    load_config,
    resolve_experiment,
)

__all__ = [
    "ExperimentConfig",
    "create_runner",
    "load_config",
    "resolve_experiment",
    # Exceptions
    "ExperimentError",
    "ConfigError",
    "InvariantViolation",
    "OutputError",
]
