"""
Parameter counts and experiment result rows.
"""

import enum
from dataclasses import dataclass, field


class CountConvention(str, enum.Enum):
    """How free scalar parameters are counted."""

    INNER_OUTER = "inner-outer"
    OUTER_ONLY = "outer-only"


@dataclass(frozen=True)
class ParamCount:
    """
    A parameter budget N tagged with its counting convention.

    Attributes:
        convention: inner-outer counts outer coefficients plus c scalars
            per inner step; outer-only counts outer coefficients only
        n: The count, always >= 1
    """

    convention: CountConvention
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"parameter count must be >= 1, got {self.n}")

    def __str__(self) -> str:
        return f"{self.n} ({self.convention.value})"


@dataclass(frozen=True)
class ResultRow:
    """
    One measured error.

    Attributes:
        experiment: Experiment id
        parameters: Ordered (name, value) pairs describing the run
        count: Parameter count with its convention
        metric: Error metric name, e.g. "L2" or "sup"
        value: The error, >= 0
        wall_time: Seconds spent producing the row
    """

    experiment: str
    parameters: tuple[tuple[str, object], ...]
    count: ParamCount
    metric: str
    value: float
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        if not self.value >= 0:
            raise ValueError(f"error value must be >= 0, got {self.value}")

    @property
    def parameter_string(self) -> str:
        return ";".join(f"{name}={value}" for name, value in self.parameters)
