#!/usr/bin/env python3
"""
Experiment CLI Entry Point

Runs one experiment per invocation and writes plot-ready CSV files and
the resolved manifest under --out.

Exit codes: 0 all gates passed, 1 usage or config error, 2 invariant
violation, 3 I/O error.
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Sequence

from src.config import LOG_LEVEL
from src.models import CountConvention

from .exceptions import ConfigError, ExperimentError, InvariantViolation
from .factory import create_runner, load_config, resolve_experiment

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Raises ConfigError instead of exiting, so usage errors map to 1."""

    def error(self, message: str):
        raise ConfigError(message)


def _common_flags() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="outer polynomial degree")
    common.add_argument("--k", type=int, help="inner iteration depth")
    common.add_argument("--gamma", type=float, help="m = floor(gamma k)")
    common.add_argument("--p", type=float, help="L^p error exponent")
    common.add_argument(
        "--quad-order",
        dest="quad_order",
        type=int,
        help="Gauss-Legendre nodes per panel",
    )
    common.add_argument(
        "--grading", type=int, help="graded panel levels per cusp side"
    )
    common.add_argument("--grid", type=int, help="2D grid points per axis")
    common.add_argument("--seed", type=int, help="random star seed")
    common.add_argument(
        "--config", type=Path, help="JSON config file; flags override it"
    )
    common.add_argument("--out", type=Path, help="output directory")
    common.add_argument(
        "--count-convention",
        dest="count_convention",
        choices=[c.value for c in CountConvention],
        help="how free parameters are counted",
    )
    return common


def _cusp_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--preset", choices=["single", "multi", "analytic"]
    )
    parser.add_argument(
        "--function", type=Path, help="cusp function JSON file"
    )
    parser.add_argument(
        "--refit",
        action="store_true",
        default=None,
        help="least-squares outer coefficients",
    )
    parser.add_argument(
        "--inner-coeffs", dest="inner_coeffs", type=int, choices=[1, 2]
    )


def build_parser() -> ArgumentParser:
    common = _common_flags()
    parser = ArgumentParser(
        prog="cuspapprox",
        description="Deep composite approximation of cusp functions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    diagnose = commands.add_parser(
        "diagnose", parents=[common], help="inner iteration invariants"
    )
    diagnose.add_argument(
        "--t", dest="t_grid", type=float, nargs="+", help="t values"
    )
    diagnose.add_argument(
        "--s", dest="s_values", type=int, nargs="+", help="root orders"
    )

    cusp1d = commands.add_parser(
        "cusp1d", parents=[common], help="one 1D composite run"
    )
    _cusp_flags(cusp1d)

    sweep = commands.add_parser(
        "sweep", parents=[common], help="error versus N sweep"
    )
    _cusp_flags(sweep)
    sweep.add_argument("--k-min", dest="k_min", type=int)
    sweep.add_argument("--k-max", dest="k_max", type=int)

    star2d = commands.add_parser(
        "star2d", parents=[common], help="2D star level set"
    )
    star2d.add_argument("--variant", choices=["symmetric", "uneven"])
    star2d.add_argument("--star", type=Path, help="star JSON file")
    star2d.add_argument(
        "--no-grid",
        dest="write_grid",
        action="store_false",
        default=None,
        help="skip the grid field CSV",
    )
    return parser


def parse_config(argv: Sequence[str] | None):
    """Parse flags into a validated ExperimentConfig."""
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    config_path = args.pop("config", None)
    variant = args.pop("variant", None)
    preset = args.get("preset")
    args["experiment"] = resolve_experiment(command, preset, variant)
    return load_config(args, config_path)


async def run(argv: Sequence[str] | None = None) -> int:
    config = parse_config(argv)
    runner = create_runner(config)
    outcome = await runner.run()
    for path in outcome.files:
        print(path)
    if not outcome.gates_passed:
        raise InvariantViolation(
            f"{len(outcome.failures)} invariant check(s) failed: "
            f"{outcome.failures[0]}"
        )
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    logging.basicConfig(
        level=LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
    )
    try:
        return asyncio.run(run(argv))
    except ExperimentError as e:
        logger.error("experiment_failed: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        # Library preconditions rejected a parameter
        logger.error("invalid_parameters: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return ConfigError.exit_code


if __name__ == "__main__":
    sys.exit(main())
