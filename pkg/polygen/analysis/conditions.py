"""Periodicity conditions of the autonomous second-order seed.

With rotation multipliers of common period P the ratios ``u_m`` are
P-periodic, so ``y_m(l + P) = beta_m y_m(l)`` with ``beta_m`` the product of
one period of ratios. Writing ``beta_m = rho_m exp(2 pi i r_m / s_m)``, the
zero sets are (asymptotically) periodic with period
``lcm{s_m P : rho_m = 1}`` when every ``rho_m <= 1`` and one equals 1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from polygen.constants.tolerances import (
    CONDITION_DENOMINATOR_BOUND,
    CONDITION_PHASE_TOL,
    CONDITION_UNIT_TOL,
    ZERO_COEFFICIENT_TOL,
)
from polygen.constants.types import ComplexArray
from polygen.errors import CardinalityMismatchError, SeedSpecError, ZeroCoefficientError
from polygen.helpers.helpers import lcm_of, rational_phase
from polygen.numerics.vieta import elementary_symmetric
from polygen.primitives.polynomial import RootSet
from polygen.primitives.seeds import SecondOrderParams, geometric_factor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodicityConditionReport:
    beta: tuple[complex, ...]
    rho: tuple[float, ...]
    # r_m / s_m in turns, None where the phase is not rational within tolerance
    phase_fractions: tuple[Fraction | None, ...]
    satisfied: bool
    predicted_period: int | None
    period_base: int
    unit_tol: float = CONDITION_UNIT_TOL
    phase_tol: float = CONDITION_PHASE_TOL


def ratio_products(
    x0: RootSet, x1: RootSet, params: SecondOrderParams, period_base: int
) -> ComplexArray:
    """``beta_m``: the product of ``u_m(k)`` over ``k = 0 .. P-1``."""
    if x0.n != x1.n:
        raise CardinalityMismatchError(x0.n, x1.n)
    if not params.autonomous:
        raise SeedSpecError("Periodicity conditions need an autonomous seed")
    if period_base < 1:
        raise SeedSpecError(f"Period base must be positive, got {period_base}")
    # sigma_m = m! e_m, so the factorials cancel in the ratio
    e0 = elementary_symmetric(x0.roots)[1:]
    e1 = elementary_symmetric(x1.roots)[1:]
    if np.any(np.abs(e0) < ZERO_COEFFICIENT_TOL):
        raise ZeroCoefficientError("A symmetric function of x(0) vanishes")
    u0 = e1 / e0
    a, b = params.coefficients_at(0)
    if a.shape != u0.shape:
        raise CardinalityMismatchError(u0.shape[0], a.shape[0])
    factors = np.stack(
        [a**k * u0 + geometric_factor(a, k) * b for k in range(period_base)]
    )
    return np.prod(factors, axis=0)


def example4_condition_check(
    x0: RootSet,
    x1: RootSet,
    params: SecondOrderParams,
    period_base: int,
    *,
    unit_tol: float = CONDITION_UNIT_TOL,
    phase_tol: float = CONDITION_PHASE_TOL,
    max_denominator: int = CONDITION_DENOMINATOR_BOUND,
) -> PeriodicityConditionReport:
    """Check whether ``x(0), x(1)`` start a (asymptotically) periodic orbit."""
    beta = ratio_products(x0, x1, params, period_base)
    rho = np.abs(beta)
    unit = np.abs(rho - 1) <= unit_tol
    phases = tuple(
        rational_phase(complex(value), max_denominator, phase_tol) for value in beta
    )
    satisfied = (
        bool(np.all(rho <= 1 + unit_tol))
        and bool(unit.any())
        and all(phases[m] is not None for m in range(beta.shape[0]) if unit[m])
    )
    predicted = None
    if satisfied:
        predicted = lcm_of(
            phase.denominator * period_base
            for phase, is_unit in zip(phases, unit, strict=True)
            if is_unit and phase is not None
        )
    logger.debug("beta=%s rho=%s satisfied=%s", beta, rho, satisfied)
    return PeriodicityConditionReport(
        beta=tuple(complex(value) for value in beta),
        rho=tuple(float(value) for value in rho),
        phase_fractions=phases,
        satisfied=satisfied,
        predicted_period=predicted,
        period_base=period_base,
        unit_tol=unit_tol,
        phase_tol=phase_tol,
    )
