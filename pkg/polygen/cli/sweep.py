"""Parameter sweeps comparing the predicted and the observed behaviour.

Cells are independent and run in a process pool capped by
``POLYGEN_THREADS``; rows come back in grid order whatever the worker count.
"""

import itertools
import logging
import os
from collections.abc import Sequence
from dataclasses import dataclass
from multiprocessing import Pool

from polygen.analysis.periods import PeriodReport, detect_period
from polygen.analysis.taxonomy import TaxonomyReport, classify_parameters
from polygen.cli.config import AnalysisConfig, Multiplier, SweepConfig
from polygen.engine.generation import solve_initial_value
from polygen.errors import ConfigError, PolygenError
from polygen.primitives.polynomial import RootSet
from polygen.primitives.seeds import AffineParams, SeedSpec
from polygen.primitives.trajectory import GenerationSpec

logger = logging.getLogger(__name__)

THREADS_ENV = "POLYGEN_THREADS"


@dataclass(frozen=True)
class SweepCell:
    index: int
    multipliers: tuple[Multiplier, ...]
    b: tuple[complex, ...]
    initial: RootSet
    steps: int
    analysis: AnalysisConfig


@dataclass(frozen=True)
class SweepRow:
    index: int
    labels: tuple[str, ...]
    predicted_label: str
    predicted_period: int | None
    verdict: str | None
    period: int | None
    max_modulus: float | None
    # None where the taxonomy makes no prediction or the cell failed
    agreement: bool | None
    error: str | None = None

    def as_dict(self) -> dict[str, object]:
        row: dict[str, object] = {"cell": self.index}
        for m, label in enumerate(self.labels, start=1):
            row[f"a_{m}"] = label
        row.update(
            predicted_label=self.predicted_label,
            predicted_period=self.predicted_period,
            verdict=self.verdict,
            period=self.period,
            max_modulus=self.max_modulus,
            agreement=self.agreement,
            error=self.error,
        )
        return row


def sweep_fieldnames(n: int) -> list[str]:
    return [
        "cell",
        *(f"a_{m}" for m in range(1, n + 1)),
        "predicted_label",
        "predicted_period",
        "verdict",
        "period",
        "max_modulus",
        "agreement",
        "error",
    ]


def agrees(taxonomy: TaxonomyReport, report: PeriodReport) -> bool | None:
    """Whether the observed verdict matches the parameter-based prediction."""
    label = taxonomy.label
    if label == "inconclusive":
        return None
    if label == "divergent":
        return report.verdict == "divergent"
    if label == "convergent":
        return report.verdict == "convergent"
    expected = taxonomy.predicted_period
    if label == "isochronous":
        return report.verdict == "exact-periodic" and report.period == expected
    if expected == 1 and report.verdict == "convergent":
        return True
    return (
        report.verdict in ("exact-periodic", "asymptotically-periodic")
        and report.period == expected
    )


def evaluate_cell(cell: SweepCell) -> SweepRow:
    labels = tuple(entry.label for entry in cell.multipliers)
    rotations = tuple(entry.rotation for entry in cell.multipliers)
    params = AffineParams(
        tuple(entry.value for entry in cell.multipliers),
        cell.b,
        rotations if any(rotations) else None,
    )
    taxonomy = classify_parameters(params)
    try:
        seed = SeedSpec("affine", params, len(params.a))
        trajectory = solve_initial_value(
            GenerationSpec(seed), (cell.initial,), cell.steps
        )
        max_period = max(1, min(cell.analysis.max_period, len(trajectory) // 3))
        report = detect_period(
            trajectory,
            max_period,
            cell.analysis.tol,
            asymptotic_tol=cell.analysis.asymptotic_tol,
            divergence_threshold=cell.analysis.divergence_threshold,
        )
    except PolygenError as error:
        logger.warning("Sweep cell %d failed: %s", cell.index, error)
        return SweepRow(
            cell.index,
            labels,
            taxonomy.label,
            taxonomy.predicted_period,
            None,
            None,
            None,
            None,
            f"{type(error).__name__}: {error}",
        )
    return SweepRow(
        cell.index,
        labels,
        taxonomy.label,
        taxonomy.predicted_period,
        report.verdict,
        report.period,
        report.max_modulus,
        agrees(taxonomy, report),
    )


def sweep_cells(config: SweepConfig) -> list[SweepCell]:
    return [
        SweepCell(
            index, combination, config.b, config.initial, config.steps, config.analysis
        )
        for index, combination in enumerate(itertools.product(*config.axes))
    ]


def sweep_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ConfigError(f"{THREADS_ENV} must be positive, got {workers}")
    return workers


def run_sweep(config: SweepConfig, workers: int | None = None) -> list[SweepRow]:
    cells = sweep_cells(config)
    workers = min(workers or sweep_workers(), len(cells))
    logger.info("Sweeping %d cells on %d workers", len(cells), workers)
    if workers <= 1:
        return [evaluate_cell(cell) for cell in cells]
    with Pool(processes=workers) as pool:
        return list(pool.imap(evaluate_cell, cells))


def summarise(rows: Sequence[SweepRow]) -> dict[str, int]:
    return {
        "cells": len(rows),
        "agree": sum(row.agreement is True for row in rows),
        "disagree": sum(row.agreement is False for row in rows),
        "unpredicted": sum(row.agreement is None and row.error is None for row in rows),
        "failed": sum(row.error is not None for row in rows),
    }
