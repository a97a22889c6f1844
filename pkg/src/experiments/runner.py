"""
Experiment runner.

Each experiment writes `<out>/<experiment>.csv`, a timing table and the
resolved manifest. Diagnostics add a summary of the quadratic constant
and basin entry per root order; 2D runs add the grid field. Sweep rows
are computed concurrently in worker threads and assembled in a fixed
order.
"""

import asyncio
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from src.composite import balance, baseline_cheb, build, param_count
from src.config import (
    BASIN_ETAS,
    BASIN_K_MAX,
    BASIN_TAUS,
    GRID_FILE,
    INNER_DIAGNOSTICS,
    MANIFEST_FILE,
    MULTI_CUSP_1D,
    QUADRATIC_BASIN,
    QUADRATIC_STEPS,
    QUADRATIC_T_POINTS,
    QUADRATIC_T_RANGE,
    RESULT_FILE,
    SAMPLE_POINTS,
    SAMPLES_FILE,
    STAR2D_SYMMETRIC,
    STAR2D_UNEVEN,
    SUMMARY_FILE,
    SUP_GRID_SIZE,
    SWEEP_N,
    SYMMETRIC_STAR,
    TIMING_FILE,
    UNEVEN_STAR,
)
from src.libs.chebyshev import SYMMETRIC
from src.libs.quadrature import PanelPartition, lp_error, sup_error
from src.libs.rootiter import Exponent, basin_entry, trace
from src.models import (
    PRESETS,
    CuspFunction,
    GridSpec,
    ParamCount,
    ResultRow,
    StarParams,
)
from src.star2d import (
    Normalization,
    approximate_rstar,
    baseline_rstar,
    exact_profile,
    grid_l2_distance,
    grid_points,
    level_fn,
    make_uneven_star,
    symmetric_star,
)

from .analysis import log_linear_fit
from .exceptions import ConfigError
from .factory import ExperimentConfig, load_config_file
from .writer import emit_plotdata, emit_timing, write_csv, write_manifest

logger = logging.getLogger(__name__)

# Tolerance of the reciprocal identity gate
IDENTITY_TOLERANCE = 1e-12

DIAGNOSTIC_HEADER = (
    "t", "s", "k", "g", "y", "delta", "e", "identity_residual", "squeeze_ok"
)
SWEEP_HEADER = (
    "k", "m", "N", "convention", "composite_error", "baseline_error"
)
SUMMARY_HEADER = ("s", "metric", "tau", "eta", "value")


@dataclass
class RunOutcome:
    """
    Files written by a run and whether its invariant gates passed.

    Attributes:
        experiment: Experiment id
        files: Paths written, in order
        gates_passed: False if any gate failed
        failures: Human-readable gate failures
    """

    experiment: str
    files: list[Path] = field(default_factory=list)
    gates_passed: bool = True
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.gates_passed = False
        self.failures.append(message)


@dataclass(frozen=True)
class SweepRow:
    k: int
    m: int
    count: ParamCount
    composite_error: float
    baseline_error: float
    wall_time: float


class ExperimentRunner:
    """
    Runs one configured experiment and writes its outputs.
    """

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.out = Path(config.out)

    def _path(self, template: str) -> Path:
        return self.out / template.format(self.config.experiment)

    async def run(self) -> RunOutcome:
        """Dispatch on the experiment id, then write the manifest."""
        experiment = self.config.experiment
        logger.info("experiment_starting: experiment=%s", experiment)
        if experiment == INNER_DIAGNOSTICS:
            outcome = self.run_inner_diagnostics()
        elif experiment == SWEEP_N:
            outcome = await self.run_sweep_n()
        elif experiment in (STAR2D_SYMMETRIC, STAR2D_UNEVEN):
            outcome = self.run_star2d()
        else:
            outcome = self.run_cusp1d()
        outcome.files.append(
            write_manifest(
                self.config.model_dump(mode="json"),
                self.out / MANIFEST_FILE,
            )
        )
        logger.info(
            "experiment_finished: experiment=%s, gates_passed=%s, files=%s",
            experiment,
            outcome.gates_passed,
            len(outcome.files),
        )
        return outcome

    # --- inner iteration diagnostics ---

    def run_inner_diagnostics(self) -> RunOutcome:
        """
        Trace the iteration for every (t, s) and check the reciprocal
        identity and the monotone squeeze at each step.
        """
        outcome = RunOutcome(self.config.experiment)
        k_max = self.config.k
        rows = []
        started = time.perf_counter()
        for s in self.config.s_values:
            exp = Exponent(1, s)
            for t in self.config.t_grid:
                # One extra step so every reported k has a residual
                tr = trace(t, exp, k_max + 1)
                residuals = tr.identity_residuals()
                violations = set(tr.squeeze_violations())
                for row, residual in zip(tr.rows[: k_max + 1], residuals):
                    squeeze_ok = row.k not in violations
                    rows.append(
                        (t, s, row.k, row.g, row.y, row.delta, row.e,
                         residual, squeeze_ok)
                    )
                    if abs(residual) > IDENTITY_TOLERANCE:
                        outcome.fail(
                            f"identity residual {residual:.3e} at "
                            f"t={t}, s={s}, k={row.k}"
                        )
                    if not squeeze_ok:
                        outcome.fail(
                            f"squeeze violated at t={t}, s={s}, k={row.k}"
                        )
        summary = []
        for s in self.config.s_values:
            exp = Exponent(1, s)
            summary.append(self._quadratic_constant(exp))
            summary.extend(self._basin_entries(exp))
        elapsed = time.perf_counter() - started
        outcome.files.append(
            write_csv(self._path(RESULT_FILE), DIAGNOSTIC_HEADER, rows)
        )
        outcome.files.append(
            write_csv(self._path(SUMMARY_FILE), SUMMARY_HEADER, summary)
        )
        outcome.files.append(
            emit_timing([("all", elapsed)], self._path(TIMING_FILE))
        )
        for failure in outcome.failures:
            logger.warning("invariant_failed: %s", failure)
        return outcome

    @staticmethod
    def _quadratic_constant(exp: Exponent) -> tuple:
        """
        Fitted K with |e_{k+1}| <= K e_k^2 inside the basin, maximized
        over the t grid; nan if no trace enters the basin.
        """
        lo, hi = QUADRATIC_T_RANGE
        constants = [
            trace(float(t), exp, QUADRATIC_STEPS).quadratic_constant(
                QUADRATIC_BASIN
            )
            for t in np.linspace(lo, hi, QUADRATIC_T_POINTS)
        ]
        found = [c for c in constants if c is not None]
        K = max(found) if found else math.nan
        logger.info("quadratic_constant: s=%s, tau=%s, K=%s", exp.s, lo, K)
        return (exp.s, "quadratic_constant", lo, QUADRATIC_BASIN, K)

    @staticmethod
    def _basin_entries(exp: Exponent) -> list[tuple]:
        rows = []
        for tau in BASIN_TAUS:
            for eta in BASIN_ETAS:
                k = basin_entry(exp, tau, eta, BASIN_K_MAX)
                logger.info(
                    "basin_entry: s=%s, tau=%s, eta=%s, k=%s",
                    exp.s,
                    tau,
                    eta,
                    k,
                )
                value = math.nan if k is None else k
                rows.append((exp.s, "basin_entry", tau, eta, value))
        return rows

    # --- 1D cusp experiments ---

    def cusp_function(self) -> CuspFunction:
        """The configured target: a JSON file or a named preset."""
        if self.config.function is not None:
            data = load_config_file(self.config.function)
            try:
                return CuspFunction.from_dict(data)
            except (KeyError, TypeError, ValueError) as e:
                raise ConfigError(
                    f"invalid cusp function {self.config.function}: {e}"
                ) from e
        preset = self.config.preset
        if self.config.experiment == MULTI_CUSP_1D:
            preset = "multi"
        return PRESETS[preset]()

    def _partition(self, f: CuspFunction) -> PanelPartition:
        return PanelPartition.around(
            SYMMETRIC, f.cusp_locations, grading=self.config.grading
        )

    def _lp(self, f, g, partition: PanelPartition) -> float:
        return lp_error(
            f, g, self.config.p, SYMMETRIC, partition, self.config.quad_order
        )

    def run_cusp1d(self) -> RunOutcome:
        """
        One (m, k) run: composite and matched-N baseline errors plus a
        sampled representative approximation.
        """
        cfg = self.config
        outcome = RunOutcome(cfg.experiment)
        f = self.cusp_function()
        started = time.perf_counter()
        G = build(f, cfg.m, cfg.k, refit=cfg.refit)
        count = param_count(G, cfg.count_convention, cfg.inner_coeffs)
        baseline = baseline_cheb(f, count.n)
        partition = self._partition(f)
        errors = {
            ("composite", f"L{cfg.p:g}"): self._lp(f, G, partition),
            ("baseline", f"L{cfg.p:g}"): self._lp(f, baseline, partition),
            ("composite", "sup"): sup_error(
                f, G, SYMMETRIC, SUP_GRID_SIZE
            ),
            ("baseline", "sup"): sup_error(
                f, baseline, SYMMETRIC, SUP_GRID_SIZE
            ),
        }
        elapsed = time.perf_counter() - started
        params = (
            ("m", cfg.m),
            ("k", cfg.k),
            ("p", cfg.p),
            ("cusps", len(f.terms)),
            ("refit", cfg.refit),
        )
        results = []
        for (model, metric), value in errors.items():
            if not math.isfinite(value) or value < 0:
                outcome.fail(f"{model} {metric} error is {value}")
                continue
            results.append(
                ResultRow(
                    experiment=cfg.experiment,
                    parameters=(("model", model), *params),
                    count=count,
                    metric=metric,
                    value=value,
                    wall_time=elapsed,
                )
            )
        logger.info(
            "cusp1d_errors: N=%s, composite=%s, baseline=%s",
            count,
            errors[("composite", f"L{cfg.p:g}")],
            errors[("baseline", f"L{cfg.p:g}")],
        )
        outcome.files.append(emit_plotdata(results, self._path(RESULT_FILE)))

        x = SYMMETRIC.linspace(SAMPLE_POINTS)
        samples = zip(x, f(x), G(x), baseline(x))
        outcome.files.append(
            write_csv(
                self._path(SAMPLES_FILE),
                ("x", "f", "composite", "baseline"),
                ((float(a), float(b), float(c), float(d))
                 for a, b, c, d in samples),
            )
        )
        outcome.files.append(
            emit_timing([("all", elapsed)], self._path(TIMING_FILE))
        )
        return outcome

    def _sweep_row(self, f: CuspFunction, k: int) -> SweepRow:
        cfg = self.config
        started = time.perf_counter()
        m = balance(k, cfg.gamma)
        G = build(f, m, k, refit=cfg.refit)
        count = param_count(G, cfg.count_convention, cfg.inner_coeffs)
        baseline = baseline_cheb(f, count.n)
        partition = self._partition(f)
        row = SweepRow(
            k=k,
            m=m,
            count=count,
            composite_error=self._lp(f, G, partition),
            baseline_error=self._lp(f, baseline, partition),
            wall_time=time.perf_counter() - started,
        )
        logger.info(
            "sweep_row: k=%s, m=%s, N=%s, composite=%s, baseline=%s",
            k,
            m,
            count.n,
            row.composite_error,
            row.baseline_error,
        )
        return row

    async def run_sweep_n(self) -> RunOutcome:
        """
        Sweep k over [k_min, k_max] with m = floor(gamma k) and compare
        against the baseline with the same N; rows sorted by N.
        """
        cfg = self.config
        outcome = RunOutcome(cfg.experiment)
        f = self.cusp_function()
        ks = range(cfg.k_min, cfg.k_max + 1)
        rows = await asyncio.gather(
            *(asyncio.to_thread(self._sweep_row, f, k) for k in ks)
        )
        rows = sorted(rows, key=lambda row: (row.count.n, row.k))
        for row in rows:
            for name in ("composite_error", "baseline_error"):
                value = getattr(row, name)
                if not math.isfinite(value) or value < 0:
                    outcome.fail(f"{name} is {value} at k={row.k}")
        if len(rows) >= 2:
            try:
                fit = log_linear_fit(
                    [row.count.n for row in rows],
                    [row.composite_error for row in rows],
                    floor=1e-12,
                )
                logger.info(
                    "sweep_fit: slope=%s, r_squared=%s",
                    fit.slope,
                    fit.r_squared,
                )
            except ValueError:
                logger.info("sweep_fit_skipped: too few points above floor")
        outcome.files.append(
            write_csv(
                self._path(RESULT_FILE),
                SWEEP_HEADER,
                (
                    (row.k, row.m, row.count.n, row.count.convention.value,
                     row.composite_error, row.baseline_error)
                    for row in rows
                ),
            )
        )
        outcome.files.append(
            emit_timing(
                [(f"k={row.k}", row.wall_time) for row in rows],
                self._path(TIMING_FILE),
            )
        )
        return outcome

    # --- 2D star experiments ---

    def star_params(self) -> StarParams:
        """The configured star: a JSON file or the variant's defaults."""
        cfg = self.config
        if cfg.star is not None:
            data = load_config_file(cfg.star)
            try:
                return StarParams.from_dict(data)
            except (KeyError, TypeError, ValueError) as e:
                raise ConfigError(f"invalid star {cfg.star}: {e}") from e
        if cfg.experiment == STAR2D_UNEVEN:
            preset = UNEVEN_STAR
            return make_uneven_star(
                K=preset["tips"],
                seed=cfg.seed,
                jitter=preset["jitter"],
                weight_range=preset["weight_range"],
                decay_range=preset["decay_range"],
                denominators=preset["denominators"],
                r0=preset["r0"],
                sharpness=preset["sharpness"],
                theta0=preset["theta0"],
            )
        preset = SYMMETRIC_STAR
        return symmetric_star(
            tips=preset["tips"],
            r0=preset["r0"],
            weight=preset["weight"],
            decay=preset["decay"],
            exponent=Exponent(preset["r"], preset["s"]),
            sharpness=preset["sharpness"],
            theta0=preset["theta0"],
        )

    def run_star2d(self) -> RunOutcome:
        """
        Deep composite versus matched-N Chebyshev radial profiles,
        compared through their level functions on the grid.
        """
        cfg = self.config
        outcome = RunOutcome(cfg.experiment)
        params = self.star_params()
        grid = GridSpec(cfg.grid)
        started = time.perf_counter()

        deep = approximate_rstar(params, cfg.m, cfg.k)
        count = deep.param_count()
        baseline = baseline_rstar(params, count.n)

        x, y = grid_points(grid)
        f_true = level_fn(x, y, params, exact_profile(params))
        f_deep = level_fn(x, y, params, deep)
        f_base = level_fn(x, y, params, baseline)
        normalization = Normalization.AREA
        deep_error = grid_l2_distance(f_true, f_deep, normalization)
        base_error = grid_l2_distance(f_true, f_base, normalization)
        ratio = deep_error / base_error if base_error > 0 else 0.0
        elapsed = time.perf_counter() - started

        logger.info(
            "star2d_errors: tips=%s, N=%s, deep=%s, baseline=%s, ratio=%s",
            len(params.tips),
            count,
            deep_error,
            base_error,
            ratio,
        )
        if deep_error > base_error:
            outcome.fail(
                f"deep error {deep_error:.3e} exceeds baseline "
                f"{base_error:.3e}"
            )

        run_params = (
            ("tips", len(params.tips)),
            ("m", cfg.m),
            ("k", cfg.k),
            ("grid", cfg.grid),
        )
        # Only the generated uneven star depends on the seed
        if cfg.experiment == STAR2D_UNEVEN and cfg.star is None:
            run_params += (("seed", cfg.seed),)
        run_params += (("normalization", normalization.value),)
        results = [
            ResultRow(cfg.experiment, run_params, count, metric, value,
                      elapsed)
            for metric, value in (
                ("L2_deep", deep_error),
                ("L2_baseline", base_error),
                ("ratio", ratio),
            )
        ]
        outcome.files.append(emit_plotdata(results, self._path(RESULT_FILE)))
        if cfg.write_grid:
            columns = zip(
                x.ravel(), y.ravel(), f_true.ravel(), f_deep.ravel(),
                f_base.ravel(),
            )
            outcome.files.append(
                write_csv(
                    self._path(GRID_FILE),
                    ("x", "y", "f_true", "f_deep", "f_baseline"),
                    (tuple(float(v) for v in row) for row in columns),
                )
            )
        outcome.files.append(
            emit_timing([("all", elapsed)], self._path(TIMING_FILE))
        )
        return outcome
