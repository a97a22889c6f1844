"""
Experiment identifiers and output file names for the experiment CLI.
This module contains the centralized definitions of all names used when
writing results, so the runner and the tests agree on them.
"""

# Experiment ids, one per study
INNER_DIAGNOSTICS = "inner-diagnostics"
CUSP_1D = "cusp1d"
MULTI_CUSP_1D = "multicusp1d"
SWEEP_N = "sweep-n"
STAR2D_SYMMETRIC = "star2d-symmetric"
STAR2D_UNEVEN = "star2d-uneven"

EXPERIMENT_IDS = (
    INNER_DIAGNOSTICS,
    CUSP_1D,
    MULTI_CUSP_1D,
    SWEEP_N,
    STAR2D_SYMMETRIC,
    STAR2D_UNEVEN,
)

# Result table for an experiment (format with experiment id)
# Example usage: RESULT_FILE.format("sweep-n") -> "sweep-n.csv"
RESULT_FILE = "{}.csv"

# Grid field export, 2D experiments only
GRID_FILE = "{}_grid.csv"

# Representative approximation samples, 1D experiments only
SAMPLES_FILE = "{}_samples.csv"

# Quadratic constant and basin entry per root order, diagnostics only
SUMMARY_FILE = "{}_summary.csv"

# Per-row wall times, kept apart so result tables stay byte-identical
TIMING_FILE = "{}_timing.csv"

# Fully resolved configuration of the last run
MANIFEST_FILE = "manifest.json"
