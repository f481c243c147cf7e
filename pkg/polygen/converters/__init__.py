from polygen.converters.csv_converter import (
    TrajectoryTable,
    read_trajectory_csv,
    trajectory_csv_text,
    write_trajectory_csv,
)
from polygen.converters.json_converter import dumps_report, to_jsonable, write_report
from polygen.converters.plots import plane_figure, series_figure

__all__ = [
    "TrajectoryTable",
    "dumps_report",
    "plane_figure",
    "read_trajectory_csv",
    "series_figure",
    "to_jsonable",
    "trajectory_csv_text",
    "write_report",
    "write_trajectory_csv",
]
