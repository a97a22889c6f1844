from .analytic import AnalyticFn, AnalyticKind
from .cusp import (
    PRESETS,
    CuspFunction,
    CuspTerm,
    InvalidCuspFunctionError,
    analytic_envelope,
    multi_cusp,
    single_cusp,
)
from .result import CountConvention, ParamCount, ResultRow
from .star import GridSpec, StarConfigError, StarParams, StarTip

__all__ = [
    "AnalyticFn",
    "AnalyticKind",
    "CountConvention",
    "CuspFunction",
    "CuspTerm",
    "GridSpec",
    "InvalidCuspFunctionError",
    "PRESETS",
    "ParamCount",
    "ResultRow",
    "StarConfigError",
    "StarParams",
    "StarTip",
    "analytic_envelope",
    "multi_cusp",
    "single_cusp",
]
