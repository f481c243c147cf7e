"""CSV emitters and the trajectory reader used by ``detect-period``.

Floats are written with ``repr`` so a written trajectory reads back
bit-exactly.
"""

import csv
import io
import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from polygen.constants.types import ComplexArray, FloatArray
from polygen.errors import ConfigError
from polygen.helpers.helpers import atomic_write_text
from polygen.numerics.ordering import lexicographic_order
from polygen.primitives.trajectory import Trajectory

logger = logging.getLogger(__name__)

COMMENT = "#"
FIXED_COLUMNS = ("ell", "t", "flag_nongeneric", "flag_ambiguous")


@dataclass(frozen=True)
class TrajectoryTable:
    ells: tuple[int, ...]
    times: tuple[complex, ...]
    non_generic: tuple[bool, ...]
    ambiguous: tuple[bool, ...]
    values: ComplexArray
    comments: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return int(self.values.shape[1])


def trajectory_header(n: int) -> list[str]:
    header = list(FIXED_COLUMNS)
    for m in range(1, n + 1):
        header += [f"re_x{m}", f"im_x{m}"]
    return header


def format_time(t: complex) -> str:
    if t.imag == 0:
        return repr(t.real)
    return repr(t).strip("()")


def presented_values(trajectory: Trajectory) -> tuple[ComplexArray, str]:
    """Rows in the trajectory's ordered presentation, lexicographic otherwise."""
    if trajectory.ordered is not None:
        rule = trajectory.meta.presentation
        name = rule.describe() if rule is not None else "ordered"
        if rule is not None and rule.kind == "lexicographic":
            return trajectory.ordered_array(), f"{name} (unordered sets)"
        return trajectory.ordered_array(), name
    rows = [lexicographic_order(state).entries for state in trajectory.states]
    return np.array(rows, dtype=np.complex128), "lexicographic (unordered sets)"


def trajectory_csv_text(trajectory: Trajectory) -> str:
    values, presentation = presented_values(trajectory)
    buffer = io.StringIO()
    buffer.write(
        f"{COMMENT} generation={trajectory.depth} presentation={presentation}\n"
    )
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(trajectory_header(trajectory.n))
    meta = trajectory.meta
    for ell, row in enumerate(values):
        cells = [
            str(ell),
            format_time(meta.times[ell]),
            str(int(meta.non_generic[ell])),
            str(int(meta.ambiguous[ell])),
        ]
        for value in row:
            cells += [repr(float(value.real)), repr(float(value.imag))]
        writer.writerow(cells)
    return buffer.getvalue()


def write_trajectory_csv(trajectory: Trajectory, path: Path) -> Path:
    atomic_write_text(path, trajectory_csv_text(trajectory))
    logger.info("Wrote %s", path)
    return path


def read_trajectory_csv(path: Path) -> TrajectoryTable:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ConfigError(f"Cannot read trajectory file {path}: {error}") from error
    lines = text.splitlines()
    comments = tuple(line for line in lines if line.startswith(COMMENT))
    reader = csv.reader(line for line in lines if not line.startswith(COMMENT))
    header = next(reader, None)
    if header is None or tuple(header[:4]) != FIXED_COLUMNS:
        raise ConfigError(f"{path} is not a polygen trajectory file")
    width = len(header) - len(FIXED_COLUMNS)
    if width <= 0 or width % 2:
        raise ConfigError(f"{path} has an odd number of value columns")
    if header != trajectory_header(width // 2):
        raise ConfigError(f"{path} has unexpected value columns")

    ells: list[int] = []
    times: list[complex] = []
    non_generic: list[bool] = []
    ambiguous: list[bool] = []
    rows: list[list[complex]] = []
    for number, record in enumerate(reader, start=2):
        if len(record) != len(header):
            raise ConfigError(f"{path}:{number}: expected {len(header)} fields")
        try:
            ells.append(int(record[0]))
            times.append(complex(record[1]))
            non_generic.append(record[2] == "1")
            ambiguous.append(record[3] == "1")
            parts = [float(cell) for cell in record[4:]]
        except ValueError as error:
            raise ConfigError(f"{path}:{number}: {error}") from error
        pairs = zip(parts[::2], parts[1::2], strict=True)
        rows.append([complex(re, im) for re, im in pairs])
    if not rows:
        raise ConfigError(f"{path} holds no states")
    return TrajectoryTable(
        ells=tuple(ells),
        times=tuple(times),
        non_generic=tuple(non_generic),
        ambiguous=tuple(ambiguous),
        values=np.array(rows, dtype=np.complex128),
        comments=comments,
    )


def series_csv_text(ells: Sequence[int], parts: FloatArray) -> str:
    """One column per component of a real (T, N) array, indexed by ell."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["ell", *(f"x{m}" for m in range(1, parts.shape[1] + 1))])
    for ell, row in zip(ells, parts, strict=True):
        writer.writerow([str(ell), *(repr(float(value)) for value in row)])
    return buffer.getvalue()


def rows_csv_text(
    fieldnames: Sequence[str], rows: Iterable[Mapping[str, object]]
) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return buffer.getvalue()


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)
