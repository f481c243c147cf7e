"""Command implementations behind the ``polygen`` entry point.

Each command returns a ``CommandResult``; only ``polygen.cli.main`` turns
results and exceptions into process exit codes.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from polygen.analysis.conditions import example4_condition_check
from polygen.analysis.distance import set_distance
from polygen.analysis.periods import (
    PeriodReport,
    detect_period,
    detect_period_of_states,
)
from polygen.cli.config import OutputConfig, RunConfig, SweepConfig, preset
from polygen.cli.sweep import run_sweep, summarise, sweep_fieldnames
from polygen.constants.presets import PRESETS
from polygen.constants.tolerances import (
    ASYMPTOTIC_PERIOD_TOL,
    DIVERGENCE_THRESHOLD,
    EXACT_PERIOD_TOL,
)
from polygen.constants.types import OutputFormat, ReportDict
from polygen.converters.csv_converter import (
    presented_values,
    read_trajectory_csv,
    rows_csv_text,
    series_csv_text,
    write_trajectory_csv,
)
from polygen.converters.json_converter import to_jsonable, write_report
from polygen.converters.plots import plane_figure, series_figure
from polygen.engine.generation import (
    descend_initial_data,
    solve_from_top_generation,
    solve_generation,
    solve_initial_value,
)
from polygen.engine.key_identity import key_identity_residuals
from polygen.engine.ordering_rules import order_trajectory
from polygen.helpers.helpers import atomic_write_text, lcm_of
from polygen.numerics.roots import zeros_from_coefficients
from polygen.numerics.vieta import coefficients_from_zeros
from polygen.primitives.polynomial import CoeffVector, OrderedVector, RootSet
from polygen.primitives.seeds import SecondOrderParams
from polygen.primitives.trajectory import GenerationSpec, Trajectory
from polygen.seeds.recursions import seed_trajectory

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    outputs: tuple[Path, ...]
    report: ReportDict


def run_levels(config: RunConfig) -> tuple[Trajectory, ...]:
    """Every generation from zero up to the configured depth."""
    if config.from_top:
        return solve_from_top_generation(
            config.seed, config.depth, config.initial, config.steps, config.mode
        )
    spec = GenerationSpec(config.seed, config.depth, config.ordering)
    return solve_generation(spec, config.initial, config.steps, config.mode)


def analyse(
    trajectory: Trajectory,
    max_period: int,
    tol: float = EXACT_PERIOD_TOL,
    *,
    asymptotic_tol: float = ASYMPTOTIC_PERIOD_TOL,
    divergence_threshold: float = DIVERGENCE_THRESHOLD,
    ordered: bool = False,
) -> PeriodReport | None:
    """Period report with ``max_period`` clamped to a third of the horizon."""
    usable = min(max_period, len(trajectory) // 3)
    if usable < 1:
        logger.warning(
            "Trajectory of %d states is too short for a period scan", len(trajectory)
        )
        return None
    if usable < max_period:
        logger.info("Period scan limited to %d by the horizon", usable)
    return detect_period(
        trajectory,
        usable,
        tol,
        asymptotic_tol=asymptotic_tol,
        divergence_threshold=divergence_threshold,
        ordered=ordered,
    )


def _flag_summary(trajectory: Trajectory) -> ReportDict:
    non_generic = [k for k, flag in enumerate(trajectory.meta.non_generic) if flag]
    ambiguous = [k for k, flag in enumerate(trajectory.meta.ambiguous) if flag]
    if non_generic:
        logger.warning("Non-generic zero sets at steps %s", non_generic)
    if ambiguous:
        logger.warning("Ambiguous contiguity matches at steps %s", ambiguous)
    return {"non_generic_steps": non_generic, "ambiguous_steps": ambiguous}


def _rules(levels: Sequence[Trajectory]) -> list[str]:
    return [rule.describe() for rule in levels[-1].meta.generation.ordering]


def emit_trajectory(
    trajectory: Trajectory,
    output: OutputConfig,
    title: str,
    report: ReportDict | None = None,
) -> list[Path]:
    """Write the requested formats for one presented trajectory."""
    directory, name = output.directory, output.name
    written: list[Path] = []
    values, _ = presented_values(trajectory)
    ells = list(range(len(trajectory)))
    if "csv" in output.formats:
        written.append(
            write_trajectory_csv(trajectory, directory / f"{name}_trajectory.csv")
        )
        for part, parts in (("re", values.real), ("im", values.imag)):
            path = directory / f"{name}_{part}.csv"
            atomic_write_text(path, series_csv_text(ells, parts))
            written.append(path)
    if "svg" in output.formats:
        path = directory / f"{name}_reim.svg"
        atomic_write_text(path, series_figure(ells, values, title))
        written.append(path)
        if output.plane_plot:
            path = directory / f"{name}_plane.svg"
            atomic_write_text(path, plane_figure(values, title))
            written.append(path)
    if "json" in output.formats and report is not None:
        written.append(write_report(report, directory / f"{name}_report.json"))
    return written


def cmd_simulate(config: RunConfig) -> CommandResult:
    levels = run_levels(config)
    top = order_trajectory(levels[-1], config.presentation)
    analysis = config.analysis
    period = analyse(
        top,
        analysis.max_period,
        analysis.tol,
        asymptotic_tol=analysis.asymptotic_tol,
        divergence_threshold=analysis.divergence_threshold,
        ordered=analysis.ordered,
    )
    report: ReportDict = {
        "command": "simulate",
        "seed": to_jsonable(config.seed),
        "generation": {"depth": top.depth, "ordering": _rules(levels)},
        "from_top": config.from_top,
        "steps": config.steps,
        "mode": config.mode,
        "presentation": config.presentation.describe(),
        "flags": _flag_summary(top),
        "period": to_jsonable(period),
    }
    if period is not None:
        logger.info("Verdict %s, period %s", period.verdict, period.period)
    outputs = emit_trajectory(top, config.output, config.output.name, report)
    return CommandResult(EXIT_OK, tuple(outputs), report)


def _check(residual: float, tol: float) -> ReportDict:
    return {"max_residual": residual, "tol": tol, "passed": bool(residual <= tol)}


def _scale(states: Sequence[RootSet]) -> float:
    return max(1.0, max(float(np.max(np.abs(state.as_array()))) for state in states))


def _seed_mode_residuals(
    config: RunConfig, base_initial: Sequence[RootSet]
) -> tuple[float, float]:
    """Iterated against closed-form seed, on coefficients and on zero sets."""
    seed = config.seed
    y_initial = [coefficients_from_zeros(state) for state in base_initial]
    iterated = seed_trajectory(seed, y_initial, config.steps, "iterated")
    closed = seed_trajectory(seed, y_initial, config.steps, "closed-form")
    shift = config.verify.perturbation
    if shift:
        closed = closed[: seed.order] + [
            CoeffVector.from_array(vector.as_array() + shift)
            for vector in closed[seed.order :]
        ]
    coefficient_residual = 0.0
    for a, b in zip(iterated, closed, strict=True):
        scale = max(1.0, float(np.max(np.abs(a.as_array()))))
        gap = float(np.max(np.abs(a.as_array() - b.as_array()))) / scale
        coefficient_residual = max(coefficient_residual, gap)

    spec = GenerationSpec(seed)
    reference = solve_initial_value(spec, base_initial, config.steps, "iterated")
    zero_residual = 0.0
    hint: OrderedVector | None = None
    for ell, (state, vector) in enumerate(zip(reference.states, closed, strict=True)):
        if ell < seed.order:
            hint = OrderedVector(state.roots)
            continue
        roots = zeros_from_coefficients(vector, hint)
        hint = OrderedVector(roots.roots)
        gap = set_distance(state, roots) / _scale([state, roots])
        zero_residual = max(zero_residual, gap)
    return coefficient_residual, zero_residual


def _key_identity_residual(levels: Sequence[Trajectory]) -> float:
    worst = 0.0
    for level in levels:
        residuals = key_identity_residuals(level)
        if residuals:
            worst = max(worst, max(residuals) / _scale(level.states) ** level.n)
    return worst


def _round_trip_residual(levels: Sequence[Trajectory]) -> tuple[float, int]:
    worst, skipped = 0.0, 0
    for level in levels:
        for state in level.states:
            if state.n < 2:
                continue
            if state.non_generic:
                skipped += 1
                continue
            back = zeros_from_coefficients(
                coefficients_from_zeros(state), OrderedVector(state.roots)
            )
            worst = max(worst, set_distance(state, back) / _scale([state]))
    return worst, skipped


def cmd_verify(config: RunConfig) -> CommandResult:
    """Mode equivalence, key identity and Vieta round trips over one run."""
    tol = config.verify.tol
    if config.from_top:
        base_initial, _ = descend_initial_data(config.initial, config.depth)
    else:
        base_initial = list(config.initial)
    levels = run_levels(config)
    coefficient_residual, zero_residual = _seed_mode_residuals(config, base_initial)
    round_trip, skipped = _round_trip_residual(levels)
    checks = {
        "seed_mode_equivalence": _check(coefficient_residual, tol),
        "zero_set_mode_equivalence": _check(zero_residual, tol),
        "key_identity": _check(_key_identity_residual(levels), tol),
        "vieta_round_trip": _check(round_trip, tol),
    }
    passed = all(check["passed"] for check in checks.values())
    for name, check in checks.items():
        if not check["passed"]:
            logger.warning(
                "Check %s failed: %.3e > %.1e", name, check["max_residual"], tol
            )
    report: ReportDict = {
        "command": "verify",
        "seed": to_jsonable(config.seed),
        "depth": config.depth,
        "steps": config.steps,
        "perturbation": to_jsonable(config.verify.perturbation),
        "checks": checks,
        "non_generic_skipped": skipped,
        "passed": passed,
    }
    outputs: list[Path] = []
    if "json" in config.output.formats:
        path = config.output.directory / f"{config.output.name}_verify.json"
        outputs.append(write_report(report, path))
    return CommandResult(
        EXIT_OK if passed else EXIT_VERIFY_FAILED, tuple(outputs), report
    )


def _condition_report(config: RunConfig) -> ReportDict | None:
    params = config.seed.params
    if not isinstance(params, SecondOrderParams) or not params.autonomous:
        return None
    if params.rotations is None or any(r is None for r in params.rotations):
        return None
    period_base = lcm_of(r.p for r in params.rotations if r is not None)
    check = example4_condition_check(
        config.initial[0], config.initial[1], params, period_base
    )
    return {"periodicity_conditions": to_jsonable(check)}


def reproduce_one(
    name: str, out: Path, formats: Sequence[OutputFormat] | None = None
) -> CommandResult:
    example = preset(name)
    config = RunConfig.from_preset(example).with_overrides(out=out, formats=formats)
    levels = run_levels(config)
    top = order_trajectory(levels[-1], config.presentation)
    period = analyse(top, example.max_period)
    report: ReportDict = {
        "command": "reproduce",
        "preset": example.name,
        "seed": to_jsonable(config.seed),
        "generation": {"depth": top.depth, "ordering": _rules(levels)},
        "presentation": config.presentation.describe(),
        "figure_steps": example.figure_steps,
        "analysis_steps": example.analysis_steps,
        "flags": _flag_summary(top),
        "period": to_jsonable(period),
        "expected": {
            "verdict": example.expected_verdict,
            "period": example.expected_period,
        },
    }
    matches = (
        period is not None
        and period.verdict == example.expected_verdict
        and period.period == example.expected_period
    )
    if config.presentation.kind == "contiguity":
        bound = 2 * example.expected_period
        ordered = analyse(top, bound, ordered=True)
        report["ordered_period"] = to_jsonable(ordered)
        divides = (
            ordered is not None
            and ordered.period is not None
            and bound % ordered.period == 0
        )
        report["ordered_period_divides"] = divides
        matches = matches and divides
    conditions = _condition_report(config)
    if conditions is not None:
        report.update(conditions)
    report["matches_expected"] = matches
    if not matches:
        logger.warning("Preset %s did not reproduce its expected verdict", name)
    window = top.head(example.figure_steps + 1)
    title = f"Example {example.name}, ell = 0..{example.figure_steps}"
    outputs = emit_trajectory(window, config.output, title, report)
    return CommandResult(
        EXIT_OK if matches else EXIT_VERIFY_FAILED, tuple(outputs), report
    )


def cmd_reproduce(
    names: Sequence[str], out: Path, formats: Sequence[OutputFormat] | None = None
) -> CommandResult:
    """Reproduce one or more presets; ``["all"]`` selects every preset."""
    selected = list(PRESETS) if list(names) == ["all"] else list(names)
    outputs: list[Path] = []
    reports: dict[str, ReportDict] = {}
    exit_code = EXIT_OK
    for name in selected:
        result = reproduce_one(name, out, formats)
        outputs.extend(result.outputs)
        reports[name] = result.report
        exit_code = max(exit_code, result.exit_code)
    return CommandResult(exit_code, tuple(outputs), {"presets": reports})


def cmd_sweep(config: SweepConfig, workers: int | None = None) -> CommandResult:
    rows = run_sweep(config, workers)
    output = config.output
    outputs: list[Path] = []
    text = rows_csv_text(
        sweep_fieldnames(len(config.axes)), (row.as_dict() for row in rows)
    )
    path = output.directory / f"{output.name}.csv"
    atomic_write_text(path, text)
    outputs.append(path)
    summary = summarise(rows)
    report: ReportDict = {
        "command": "sweep",
        "summary": summary,
        "rows": [row.as_dict() for row in rows],
    }
    if "json" in output.formats:
        outputs.append(write_report(report, output.directory / f"{output.name}.json"))
    logger.info("Sweep summary: %s", summary)
    return CommandResult(EXIT_OK, tuple(outputs), report)


def cmd_detect_period(
    path: Path,
    max_period: int,
    tol: float = EXACT_PERIOD_TOL,
    *,
    asymptotic_tol: float = ASYMPTOTIC_PERIOD_TOL,
    ordered: bool = False,
    out: Path | None = None,
) -> CommandResult:
    """Period report for a trajectory CSV written by ``simulate``."""
    table = read_trajectory_csv(path)
    usable = min(max_period, table.values.shape[0] // 3)
    if usable < 1:
        usable = max_period
    report = detect_period_of_states(
        table.values, usable, tol, asymptotic_tol=asymptotic_tol, ordered=ordered
    )
    data: ReportDict = {
        "command": "detect-period",
        "source": str(path),
        "states": int(table.values.shape[0]),
        "period": to_jsonable(report),
    }
    outputs: list[Path] = []
    if out is not None:
        outputs.append(write_report(data, out / f"{path.stem}_period.json"))
    return CommandResult(EXIT_OK, tuple(outputs), data)


def verify_presets(names: Sequence[str], tol: float | None = None) -> CommandResult:
    """``verify`` over presets, the release gate."""
    reports: dict[str, ReportDict] = {}
    exit_code = EXIT_OK
    for name in names:
        config = RunConfig.from_preset(preset(name)).with_overrides(tol=tol)
        config = replace(config, output=replace(config.output, formats=()))
        result = cmd_verify(config)
        reports[name] = result.report
        exit_code = max(exit_code, result.exit_code)
    return CommandResult(exit_code, (), {"presets": reports})
