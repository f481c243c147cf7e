import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from polygen.analysis.taxonomy import ModulusMarker
from polygen.converters.csv_converter import (
    presented_values,
    read_trajectory_csv,
    rows_csv_text,
    series_csv_text,
    trajectory_csv_text,
    trajectory_header,
    write_trajectory_csv,
)
from polygen.converters.json_converter import dumps_report, to_jsonable, write_report
from polygen.converters.plots import plane_figure, series_figure
from polygen.engine.generation import solve_initial_value
from polygen.engine.ordering_rules import order_trajectory
from polygen.errors import ConfigError
from polygen.primitives.polynomial import RootSet
from polygen.primitives.seeds import RationalRotation, SeedSpec
from polygen.primitives.trajectory import GenerationSpec, OrderingRule, Trajectory


@pytest.fixture
def trajectory(isochronous_seed: SeedSpec, start: RootSet) -> Trajectory:
    return solve_initial_value(GenerationSpec(isochronous_seed), [start], 15)


def test_trajectory_header() -> None:
    assert trajectory_header(2) == [
        "ell",
        "t",
        "flag_nongeneric",
        "flag_ambiguous",
        "re_x1",
        "im_x1",
        "re_x2",
        "im_x2",
    ]


def test_trajectory_csv_layout(trajectory: Trajectory) -> None:
    # Act
    lines = trajectory_csv_text(trajectory).splitlines()

    # Assert
    assert lines[0] == "# generation=0 presentation=lexicographic (unordered sets)"
    assert lines[1] == ",".join(trajectory_header(2))
    assert len(lines) == 2 + 16
    assert lines[2].startswith("0,0.0,0,0,-1.0,-1.0,1.0,0.0")


def test_written_trajectory_reads_back_exactly(
    trajectory: Trajectory, tmp_path: Path
) -> None:
    # Arrange
    path = write_trajectory_csv(trajectory, tmp_path / "run_trajectory.csv")

    # Act
    table = read_trajectory_csv(path)

    # Assert
    values, _ = presented_values(trajectory)
    assert table.n == 2
    assert table.ells == tuple(range(16))
    np.testing.assert_array_equal(table.values, values)
    assert table.comments[0].startswith("# generation=0")


def test_contiguity_presentation_is_named(trajectory: Trajectory) -> None:
    # Arrange
    presented = order_trajectory(trajectory, OrderingRule.contiguity())

    # Act
    _, description = presented_values(presented)

    # Assert
    assert description == "contiguity"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "a,b,c\n1,2,3\n",
        "ell,t,flag_nongeneric,flag_ambiguous,re_x1\n0,0,0,0,1\n",
        "ell,t,flag_nongeneric,flag_ambiguous,re_x1,im_x1\n0,0,0,0,1\n",
        "ell,t,flag_nongeneric,flag_ambiguous,re_x1,im_x1\n",
        "ell,t,flag_nongeneric,flag_ambiguous,re_x1,im_x1\n0,0,0,0,one,2\n",
    ],
)
def test_malformed_trajectory_files_are_rejected(text: str, tmp_path: Path) -> None:
    # Arrange
    path = tmp_path / "broken.csv"
    path.write_text(text, encoding="utf-8")

    # Act / Assert
    with pytest.raises(ConfigError):
        read_trajectory_csv(path)


def test_missing_trajectory_file_is_a_config_error(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        read_trajectory_csv(tmp_path / "absent.csv")


def test_series_csv_text() -> None:
    # Act
    text = series_csv_text([0, 1], np.array([[0.5, -1.0], [0.25, 2.0]]))

    # Assert
    assert text == "ell,x1,x2\n0,0.5,-1.0\n1,0.25,2.0\n"


def test_rows_csv_text_writes_empty_cells_and_booleans() -> None:
    # Act
    text = rows_csv_text(
        ["cell", "agreement", "error", "max_modulus"],
        [{"cell": 0, "agreement": True, "error": None, "max_modulus": 0.1}],
    )

    # Assert
    assert text == "cell,agreement,error,max_modulus\n0,true,,0.1\n"


def test_to_jsonable_converts_domain_values() -> None:
    # Act
    converted = to_jsonable(
        {
            "z": 1 - 2j,
            "ratio": Fraction(2, 5),
            "inf": math.inf,
            "marker": ModulusMarker.CONTRACTING,
            "rotation": RationalRotation(1, 3),
            "array": np.array([1.5, 2.5]),
            "scalar": np.float64(0.25),
        }
    )

    # Assert
    assert converted == {
        "z": [1.0, -2.0],
        "ratio": "2/5",
        "inf": "inf",
        "marker": "contracting",
        "rotation": {"q": 1, "p": 3},
        "array": [1.5, 2.5],
        "scalar": 0.25,
    }


def test_to_jsonable_rejects_unknown_objects() -> None:
    with pytest.raises(TypeError):
        to_jsonable(object())


def test_write_report_is_sorted_json(tmp_path: Path) -> None:
    # Act
    path = write_report({"b": 1, "a": [1j]}, tmp_path / "nested" / "report.json")

    # Assert
    text = path.read_text(encoding="utf-8")
    assert text == dumps_report({"a": [1j], "b": 1})
    assert json.loads(text) == {"a": [[0.0, 1.0]], "b": 1}
    assert list(path.parent.iterdir()) == [path]


def test_plane_figure_marks_every_point(trajectory: Trajectory) -> None:
    # Arrange
    values, _ = presented_values(trajectory)

    # Act
    document = plane_figure(values, "Example 1a")

    # Assert
    assert document.startswith("<?xml")
    assert document.rstrip().endswith("</svg>")
    assert "Example 1a" in document
    assert "Re x" in document
    assert document.count("<use ") >= 2 * 16
    assert 'id="axes_1"' in document
    assert 'id="axes_2"' not in document


def test_series_figure_has_two_panels(trajectory: Trajectory) -> None:
    # Arrange
    values, _ = presented_values(trajectory)

    # Act
    document = series_figure(list(range(len(trajectory))), values, "Re and Im")

    # Assert
    assert 'id="axes_2"' in document
    assert document.count("<use ") >= 2 * 2 * 16
    assert "Re x" in document
    assert "Im x" in document


def test_figures_are_byte_identical_across_renders(trajectory: Trajectory) -> None:
    # Arrange
    values, _ = presented_values(trajectory)
    ells = list(range(len(trajectory)))

    # Act
    first = (plane_figure(values, "t"), series_figure(ells, values, "t"))
    second = (plane_figure(values, "t"), series_figure(ells, values, "t"))

    # Assert
    assert first == second
    assert "<dc:date>" not in first[0]
