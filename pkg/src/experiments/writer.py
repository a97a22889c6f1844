"""
CSV and manifest output.

CSV files are comma separated with a dot decimal point and LF line
endings; floats carry 17 significant digits so they parse back exactly.
"""

import csv
import json
import logging
import math
from pathlib import Path
from typing import Any, Iterable, Sequence

from src.models import ResultRow

from .exceptions import OutputError

logger = logging.getLogger(__name__)

RESULT_HEADER = ("experiment", "parameters", "N", "convention", "metric",
                 "value")


def format_value(value: Any) -> str:
    """Render one cell deterministically."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.17g}"
    return str(value)


def write_csv(
    path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> Path:
    """
    Write a header and rows.

    Raises:
        OutputError: If the file cannot be written
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow([format_value(v) for v in row])
                count += 1
    except OSError as e:
        logger.error("csv_write_failed: path=%s", path, exc_info=True)
        raise OutputError(f"cannot write {path}: {e}") from e
    logger.info("csv_written: path=%s, rows=%s", path, count)
    return path


def emit_plotdata(results: Sequence[ResultRow], path: Path) -> Path:
    """Write result rows in the given order under a fixed header."""
    return write_csv(
        path,
        RESULT_HEADER,
        (
            (
                row.experiment,
                row.parameter_string,
                row.count.n,
                row.count.convention.value,
                row.metric,
                row.value,
            )
            for row in results
        ),
    )


def emit_timing(
    results: Sequence[tuple[str, float]], path: Path
) -> Path:
    """Write (label, seconds) pairs; kept out of the result tables."""
    return write_csv(path, ("row", "wall_time"), results)


def write_manifest(config: dict, path: Path) -> Path:
    """Write the resolved configuration as sorted, indented JSON."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(config, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as e:
        logger.error("manifest_write_failed: path=%s", path, exc_info=True)
        raise OutputError(f"cannot write {path}: {e}") from e
    return path
