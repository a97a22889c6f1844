import logging
import math
import os
from fractions import Fraction

from dotenv import load_dotenv

from src.libs.quadrature.config import (
    DEFAULT_GRADING_LEVELS,
    DEFAULT_GRADING_RATIO,
    DEFAULT_ORDER_PER_PANEL,
)

from .experiments import (
    CUSP_1D,
    EXPERIMENT_IDS,
    GRID_FILE,
    INNER_DIAGNOSTICS,
    MANIFEST_FILE,
    MULTI_CUSP_1D,
    RESULT_FILE,
    SAMPLES_FILE,
    SUMMARY_FILE,
    STAR2D_SYMMETRIC,
    STAR2D_UNEVEN,
    SWEEP_N,
    TIMING_FILE,
)

# Initialize logger at module level
logger = logging.getLogger(__name__)

load_dotenv()


# Process settings; neither changes numeric results
LOG_LEVEL = os.getenv("CUSPAPPROX_LOG_LEVEL", "INFO")
DEFAULT_OUTPUT_DIR = os.getenv("CUSPAPPROX_OUTPUT_DIR", "results")

# Balancing rule m = floor(gamma * k); (20, 15) and (22, 16) in the 2D runs
DEFAULT_GAMMA = Fraction(4, 3)

# Quadrature order per panel; grading defaults come from the library
DEFAULT_QUAD_ORDER = DEFAULT_ORDER_PER_PANEL

# 1D defaults
DEFAULT_M = 20
DEFAULT_K = 15
DEFAULT_K_MIN = 2
DEFAULT_K_MAX = 16
DEFAULT_P = 2.0
SAMPLE_POINTS = 2001
SUP_GRID_SIZE = 20001

# Symmetric five-point star
SYMMETRIC_STAR = {
    "tips": 5,
    "r0": 0.45,
    "weight": 0.28,
    "decay": 4.0,
    "r": 1,
    "s": 3,
    "sharpness": 25.0,
    "theta0": math.pi / 2,
    "m": 20,
    "k": 15,
    "grid": 400,
}

# Seeded uneven eight-point star
UNEVEN_STAR = {
    "tips": 8,
    "seed": 1,
    "r0": 0.45,
    "jitter": 0.25,
    "weight_range": (0.18, 0.32),
    "decay_range": (3.0, 6.0),
    "denominators": (2, 3, 4, 5),
    "sharpness": 25.0,
    "theta0": math.pi / 2,
    "m": 22,
    "k": 16,
    "grid": 420,
}

# Inner diagnostics defaults
DIAGNOSTIC_T_GRID = (0.0, 0.25, 0.5, 0.81, 1.0)
DIAGNOSTIC_S_VALUES = (2, 3, 4, 5)
DIAGNOSTIC_K_MAX = 10

# Quadratic constant: max |e_{k+1}| / e_k^2 once |e_k| <= basin, over t grid
QUADRATIC_T_RANGE = (0.1, 1.0)
QUADRATIC_T_POINTS = 19
QUADRATIC_BASIN = 0.1
QUADRATIC_STEPS = 30

# Basin entry k_tau: first k with sup over [tau, 1] of |e_k| <= eta
BASIN_TAUS = (0.1, 0.01)
BASIN_ETAS = (1e-3, 1e-10)
BASIN_K_MAX = 80

__all__ = [
    "CUSP_1D",
    "EXPERIMENT_IDS",
    "GRID_FILE",
    "INNER_DIAGNOSTICS",
    "MANIFEST_FILE",
    "MULTI_CUSP_1D",
    "RESULT_FILE",
    "SAMPLES_FILE",
    "SUMMARY_FILE",
    "STAR2D_SYMMETRIC",
    "STAR2D_UNEVEN",
    "SWEEP_N",
    "TIMING_FILE",
    "LOG_LEVEL",
    "DEFAULT_OUTPUT_DIR",
    "DEFAULT_GAMMA",
    "DEFAULT_QUAD_ORDER",
    "DEFAULT_GRADING_LEVELS",
    "DEFAULT_GRADING_RATIO",
    "DEFAULT_M",
    "DEFAULT_K",
    "DEFAULT_K_MIN",
    "DEFAULT_K_MAX",
    "DEFAULT_P",
    "SAMPLE_POINTS",
    "SUP_GRID_SIZE",
    "SYMMETRIC_STAR",
    "UNEVEN_STAR",
    "DIAGNOSTIC_T_GRID",
    "DIAGNOSTIC_S_VALUES",
    "DIAGNOSTIC_K_MAX",
    "QUADRATIC_T_RANGE",
    "QUADRATIC_T_POINTS",
    "QUADRATIC_BASIN",
    "QUADRATIC_STEPS",
    "BASIN_TAUS",
    "BASIN_ETAS",
    "BASIN_K_MAX",
]
