"""Empirical period detection on zero-set trajectories.

A lag ``L`` is exactly periodic when every lag-``L`` residual is within
``tol``. It is asymptotically periodic when, after some onset, every residual
is within ``asymptotic_tol``, the tail after the onset covers at least a
quarter of the curve (and at least one lag), and the maxima of successive
length-``L`` blocks do not grow: the median ratio of consecutive block
maxima, counting only blocks above the rounding floor, is at most 1.
"""

import logging
from dataclasses import dataclass

import numpy as np

from polygen.analysis.distance import ordered_distance_curve, set_distance_curve
from polygen.constants.tolerances import (
    ASYMPTOTIC_PERIOD_TOL,
    DIVERGENCE_GROWTH,
    DIVERGENCE_THRESHOLD,
    EXACT_PERIOD_TOL,
    NOISE_FLOOR_ULPS,
)
from polygen.constants.types import ComplexArray, FloatArray, Verdict
from polygen.errors import TrajectoryTooShortError
from polygen.primitives.trajectory import Trajectory

logger = logging.getLogger(__name__)

_EPS = float(np.finfo(np.float64).eps)
_PERIODIC: tuple[Verdict, ...] = ("exact-periodic", "asymptotically-periodic")


@dataclass(frozen=True)
class PeriodReport:
    verdict: Verdict
    period: int | None
    onset: int | None
    residual_curve: tuple[float, ...]
    max_period: int
    tol: float
    asymptotic_tol: float
    divergence_threshold: float
    max_modulus: float
    ordered: bool = False

    def __post_init__(self) -> None:
        if (self.period is not None) != (self.verdict in _PERIODIC):
            raise ValueError(
                f"Verdict {self.verdict!r} is inconsistent with period {self.period}"
            )


def _diverges(moduli: FloatArray, threshold: float) -> bool:
    if not np.all(np.isfinite(moduli)) or float(moduli.max()) > threshold:
        return True
    per_step = moduli.max(axis=1)
    window = max(1, per_step.size // 10)
    first = float(per_step[:window].max())
    last = float(per_step[-window:].max())
    if last < DIVERGENCE_GROWTH * max(first, 1.0):
        return False
    half = per_step[per_step.size // 2 :]
    logs = np.log(np.maximum(half, np.finfo(np.float64).tiny))
    slope = np.polyfit(np.arange(half.size, dtype=np.float64), logs, 1)[0]
    return bool(slope > 0)


def _block_trend_ok(curve: FloatArray, lag: int, noise: float) -> bool:
    blocks = curve.size // lag
    if blocks < 2:
        return True
    maxima = curve[: blocks * lag].reshape(blocks, lag).max(axis=1)
    ratios = [
        maxima[k + 1] / maxima[k]
        for k in range(blocks - 1)
        if maxima[k] > noise and maxima[k + 1] > noise
    ]
    return not ratios or float(np.median(ratios)) <= 1.0


def _asymptotic_onset(
    curve: FloatArray, lag: int, asymptotic_tol: float, noise: float
) -> int | None:
    above = np.nonzero(curve > asymptotic_tol)[0]
    onset = 0 if above.size == 0 else int(above[-1]) + 1
    if curve.size - onset < max(lag, curve.size // 4):
        return None
    if not _block_trend_ok(curve, lag, noise):
        return None
    return onset


def detect_period_of_states(
    states: ComplexArray,
    max_period: int,
    tol: float = EXACT_PERIOD_TOL,
    *,
    asymptotic_tol: float = ASYMPTOTIC_PERIOD_TOL,
    divergence_threshold: float = DIVERGENCE_THRESHOLD,
    ordered: bool = False,
) -> PeriodReport:
    """Classify a (T, N) array of zero sets, or of ordered vectors when
    ``ordered`` is set."""
    if max_period < 1:
        raise ValueError(f"max_period must be positive, got {max_period}")
    count = states.shape[0]
    if count < 3 * max_period:
        raise TrajectoryTooShortError(
            f"Period scan up to {max_period} needs {3 * max_period} states, "
            f"got {count}"
        )
    moduli = np.abs(states)
    finite = bool(np.all(np.isfinite(moduli)))
    max_modulus = float(moduli.max()) if finite else float("inf")

    def report(
        verdict: Verdict,
        period: int | None,
        onset: int | None,
        curve: FloatArray | None,
    ) -> PeriodReport:
        return PeriodReport(
            verdict=verdict,
            period=period,
            onset=onset,
            residual_curve=() if curve is None else tuple(float(v) for v in curve),
            max_period=max_period,
            tol=tol,
            asymptotic_tol=asymptotic_tol,
            divergence_threshold=divergence_threshold,
            max_modulus=max_modulus,
            ordered=ordered,
        )

    if _diverges(moduli, divergence_threshold):
        logger.info("Trajectory diverges (max modulus %.3e)", max_modulus)
        return report("divergent", None, None, None)

    distance_curve = ordered_distance_curve if ordered else set_distance_curve
    curves = {lag: distance_curve(states, lag) for lag in range(1, max_period + 1)}

    for lag, curve in curves.items():
        if np.all(curve <= tol):
            _assert_minimal(curves, lag, tol)
            return report("exact-periodic", lag, 0, curve)

    noise = NOISE_FLOOR_ULPS * _EPS * max(1.0, max_modulus)
    for lag, curve in curves.items():
        onset = _asymptotic_onset(curve, lag, asymptotic_tol, noise)
        if onset is None:
            continue
        if lag == 1:
            return report("convergent", None, onset, curve)
        return report("asymptotically-periodic", lag, onset, curve)

    closest = min(curves, key=lambda lag: float(curves[lag][-1]))
    return report("inconclusive", None, None, curves[closest])


def _assert_minimal(curves: dict[int, FloatArray], lag: int, tol: float) -> None:
    for divisor in range(1, lag):
        if lag % divisor == 0 and np.all(curves[divisor] <= tol):
            raise AssertionError(f"Period {lag} is not minimal: {divisor} passes")


def detect_period(
    trajectory: Trajectory,
    max_period: int,
    tol: float = EXACT_PERIOD_TOL,
    *,
    asymptotic_tol: float = ASYMPTOTIC_PERIOD_TOL,
    divergence_threshold: float = DIVERGENCE_THRESHOLD,
    ordered: bool = False,
) -> PeriodReport:
    """Exact, asymptotic, convergent, divergent or inconclusive verdict.

    With ``ordered`` the trajectory's ordered presentation is compared
    componentwise instead of as unordered sets.
    """
    states = trajectory.ordered_array() if ordered else trajectory.as_array()
    return detect_period_of_states(
        states,
        max_period,
        tol,
        asymptotic_tol=asymptotic_tol,
        divergence_threshold=divergence_threshold,
        ordered=ordered,
    )
