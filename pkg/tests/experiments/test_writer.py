import pytest

from src.experiments import OutputError
from src.experiments.writer import (
    emit_plotdata,
    format_value,
    write_csv,
    write_manifest,
)
from src.models import CountConvention, ParamCount, ResultRow


def _row(value, metric="L2"):
    return ResultRow(
        experiment="cusp1d",
        parameters=(("m", 20), ("k", 15)),
        count=ParamCount(CountConvention.INNER_OUTER, 57),
        metric=metric,
        value=value,
        wall_time=1.5,
    )


@pytest.mark.parametrize(
    "value, expected",
    [
        (0.1, "0.10000000000000001"),
        (2.0, "2"),
        (0.5, "0.5"),
        (float("nan"), "nan"),
        (57, "57"),
        (True, "true"),
        ("inner-outer", "inner-outer"),
    ],
)
def test_format_value(value, expected):
    assert format_value(value) == expected


def test_empty_results_give_header_only(tmp_path):
    # Act
    path = emit_plotdata([], tmp_path / "empty.csv")

    # Assert
    assert path.read_bytes() == (
        b"experiment,parameters,N,convention,metric,value\n"
    )


def test_plotdata_rows_keep_order_and_tag_convention(tmp_path):
    # Act
    path = emit_plotdata(
        [_row(0.25), _row(1e-3, "sup")], tmp_path / "rows.csv"
    )

    # Assert
    lines = path.read_text().splitlines()
    assert lines[1] == "cusp1d,m=20;k=15,57,inner-outer,L2,0.25"
    assert lines[2] == "cusp1d,m=20;k=15,57,inner-outer,sup,0.001"


def test_unwritable_destination_raises_output_error(tmp_path):
    # Arrange
    blocker = tmp_path / "blocker"
    blocker.write_text("")

    # Act & Assert
    with pytest.raises(OutputError):
        write_csv(blocker / "out.csv", ("a",), [(1,)])
    with pytest.raises(OutputError):
        write_manifest({"a": 1}, blocker / "manifest.json")


def test_manifest_is_sorted_json(tmp_path):
    # Act
    path = write_manifest({"b": 1, "a": [1, 2]}, tmp_path / "manifest.json")

    # Assert
    assert path.read_text().startswith('{\n  "a": [')
    assert path.read_text().endswith("}\n")
