"""Exceptions for the experiment CLI, one per exit code."""


class ExperimentError(Exception):
    """Base exception for experiment errors."""

    exit_code = 1


class ConfigError(ExperimentError):
    """Raised for unusable flags or configuration files."""

    exit_code = 1


class InvariantViolation(ExperimentError):
    """Raised when an invariant gate fails."""

    exit_code = 2


class OutputError(ExperimentError):
    """Raised when results cannot be written."""

    exit_code = 3


__all__ = [
    "ExperimentError",
    "ConfigError",
    "InvariantViolation",
    "OutputError",
]
