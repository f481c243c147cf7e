"""Closed-form N=2 formulas used as independent checks of the engine."""

from collections.abc import Sequence

from polygen.numerics.scalars import principal_sqrt
from polygen.numerics.vieta import coefficients_from_zeros
from polygen.primitives.polynomial import RootSet


def quadratic_zeros(y1: complex, y2: complex) -> tuple[complex, complex]:
    """Zeros of ``z**2 + y1 z + y2``, minus branch first."""
    root = principal_sqrt(y1 * y1 - 4 * y2)
    return -y1 / 2 - root / 2, -y1 / 2 + root / 2


def quadratic_generation_zero_step(
    x: RootSet, a: Sequence[complex], b: Sequence[complex]
) -> RootSet:
    """One step of the N=2 generation-zero map of the affine seed."""
    y = coefficients_from_zeros(x)
    y1 = a[0] * y[0] + b[0]
    y2 = a[1] * y[1] + b[1]
    return RootSet(quadratic_zeros(y1, y2))
