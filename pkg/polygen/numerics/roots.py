"""Simultaneous root finding by the Aberth-Ehrlich iteration.

All N approximations are updated together, so a hint from the previous time
step keeps each root on its own track along a trajectory.
"""

import logging

import numpy as np

from polygen.constants.tolerances import (
    CLUSTER_RADIUS,
    ROOT_MAX_ITER,
    ROOT_RESIDUAL_TOL,
    ROOT_STEP_TOL,
)
from polygen.constants.types import ComplexArray, FloatArray
from polygen.errors import DegreeError, NoConvergenceError, NonFiniteError
from polygen.primitives.polynomial import CoeffVector, OrderedVector, RootSet

logger = logging.getLogger(__name__)

_EPS = float(np.finfo(np.float64).eps)
# angular offset keeps the start circle off the symmetry axes of real inputs
_START_ANGLE = 0.4
POLISH_STEPS = 3


def _initial_guesses(full: ComplexArray, hint: OrderedVector | None) -> ComplexArray:
    n = full.shape[0] - 1
    if hint is not None and hint.n == n:
        guesses = hint.as_array().copy()
        scale = 1.0 + float(np.max(np.abs(guesses)))
        for i in range(1, n):
            if np.min(np.abs(guesses[:i] - guesses[i])) < 1e-10 * scale:
                # coincident hints would make the correction singular
                guesses[i] += 1e-6 * scale * np.exp(1j * (_START_ANGLE + i))
        return guesses
    if hint is not None:
        logger.debug("Ignoring hint of length %d for degree %d", hint.n, n)
    radius = 1.0 + float(np.max(np.abs(full[1:])))
    angles = 2 * np.pi * np.arange(n) / n + _START_ANGLE
    return radius * np.exp(1j * angles)


def _rounding_bound(abs_full: FloatArray, x: ComplexArray) -> FloatArray:
    """Backward error level of Horner's rule at ``x``."""
    return 4 * _EPS * np.polyval(abs_full, np.abs(x))


def _aberth_corrections(
    full: ComplexArray, deriv: ComplexArray, x: ComplexArray
) -> tuple[ComplexArray, ComplexArray]:
    p = np.polyval(full, x)
    dp = np.polyval(deriv, x)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        inverse = 1.0 / diff
        np.fill_diagonal(inverse, 0.0)
        delta = p / (dp - p * inverse.sum(axis=1))
    stuck = ~np.isfinite(delta)
    if stuck.any():
        kick = 1e-8 * (1.0 + np.abs(x[stuck])) * np.exp(1j * _START_ANGLE)
        delta[stuck] = kick
    return p, delta


def _is_multiple_root(
    mean: complex,
    full: ComplexArray,
    deriv: ComplexArray,
    abs_full: FloatArray,
) -> bool:
    """Whether the quadratic model of ``p`` at ``mean`` has a double root.

    The discriminant ``p'**2 - 2 p p''`` does not depend on where in the
    pair ``mean`` lies; it is compared with the rounding noise of its terms.
    """
    second = deriv[:-1] * np.arange(deriv.shape[0] - 1, 0, -1)
    at = np.array([mean])
    p = complex(np.polyval(full, at)[0])
    dp = complex(np.polyval(deriv, at)[0])
    d2p = complex(np.polyval(second, at)[0])
    noise_p = _EPS * float(np.polyval(abs_full, np.abs(at))[0])
    noise_dp = _EPS * float(np.polyval(np.abs(deriv), np.abs(at))[0])
    discriminant = dp * dp - 2 * p * d2p
    noise = 2 * noise_p * abs(d2p) + 2 * abs(dp) * noise_dp
    return abs(discriminant) <= noise


def _merge_clusters(
    x: ComplexArray,
    full: ComplexArray,
    deriv: ComplexArray,
    abs_full: FloatArray,
) -> ComplexArray:
    """Replace multiple roots by their mean and polish close simple pairs."""
    merged = x.copy()
    n = x.shape[0]
    close: set[int] = set()
    for i in range(n):
        for j in range(i + 1, n):
            radius = CLUSTER_RADIUS * (1.0 + max(abs(x[i]), abs(x[j])))
            if abs(x[i] - x[j]) > radius:
                continue
            mean = complex((merged[i] + merged[j]) / 2)
            if _is_multiple_root(mean, full, deriv, abs_full):
                merged[i] = merged[j] = mean
                close.discard(i)
                close.discard(j)
            else:
                close.update((i, j))
    if close:
        indices = np.array(sorted(close))
        for _ in range(POLISH_STEPS):
            _, delta = _aberth_corrections(full, deriv, merged)
            merged[indices] -= delta[indices]
        logger.debug("Polished %d roots of close simple pairs", indices.size)
    return merged


def zeros_from_coefficients(
    coeffs: CoeffVector,
    hint: OrderedVector | None = None,
    *,
    max_iter: int = ROOT_MAX_ITER,
    step_tol: float = ROOT_STEP_TOL,
    residual_tol: float = ROOT_RESIDUAL_TOL,
) -> RootSet:
    """Return the N zeros of ``z**N + sum y_m z**(N-m)``.

    A root stops moving once its residual reaches the rounding level of
    Horner's rule; the iteration ends when every correction is below
    ``step_tol`` relative to the root. The result is accepted when each
    residual is within ``residual_tol * max(1, max|y_m|)`` or at the rounding
    level, and the returned roots keep the order of ``hint``.

    Raises:
        DegreeError: for N < 2.
        NonFiniteError: if a coefficient is not finite.
        NoConvergenceError: if ``max_iter`` is exhausted with large residuals.
    """
    n = coeffs.n
    if n < 2:
        raise DegreeError(f"Root finding needs N >= 2, got {n}")
    full = coeffs.polynomial().full_coefficients()
    if not np.all(np.isfinite(full)):
        raise NonFiniteError("Coefficients must be finite")
    deriv = full[:-1] * np.arange(n, 0, -1)
    abs_full = np.abs(full)
    x = _initial_guesses(full, hint)

    active = np.ones(n, dtype=bool)
    iterations = 0
    for iterations in range(1, max_iter + 1):
        p, delta = _aberth_corrections(full, deriv, x)
        active &= np.abs(p) > _rounding_bound(abs_full, x)
        if not active.any():
            break
        x[active] -= delta[active]
        scale = np.maximum(1.0, np.abs(x[active]))
        if np.all(np.abs(delta[active]) <= step_tol * scale):
            break

    residuals = np.abs(np.polyval(full, x))
    accept = np.maximum(
        residual_tol * max(1.0, float(np.max(abs_full[1:]))),
        _rounding_bound(abs_full, x),
    )
    if not np.all(residuals <= accept):
        raise NoConvergenceError(iterations, float(np.max(residuals)))
    logger.debug("Aberth iteration finished after %d steps (N=%d)", iterations, n)

    roots = RootSet(tuple(_merge_clusters(x, full, deriv, abs_full)))
    if roots.non_generic:
        logger.debug(
            "Non-generic zero set: min separation %.3e", roots.min_separation
        )
    return roots
