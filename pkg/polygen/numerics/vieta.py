from collections.abc import Sequence

import numpy as np

from polygen.constants.types import ComplexArray
from polygen.errors import CoefficientOverflowError, DegreeError
from polygen.primitives.polynomial import CoeffVector, MonicPolynomial, RootSet


def _product_expansion(values: ComplexArray) -> ComplexArray:
    """Coefficients of prod (z - x_k), highest power first."""
    coeffs = np.zeros(values.shape[0] + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    with np.errstate(over="ignore", invalid="ignore"):
        for k, root in enumerate(values, start=1):
            coeffs[1 : k + 1] = coeffs[1 : k + 1] - root * coeffs[:k]
    return coeffs


def elementary_symmetric(values: Sequence[complex] | ComplexArray) -> ComplexArray:
    """Return ``e_0 .. e_N`` of the given values."""
    array = np.asarray(values, dtype=np.complex128)
    expansion = _product_expansion(array)
    signs = (-1.0) ** np.arange(array.shape[0] + 1)
    return signs * expansion


def coefficients_from_zeros(roots: RootSet) -> CoeffVector:
    if roots.n < 2:
        raise DegreeError(f"Vieta map needs N >= 2 zeros, got {roots.n}")
    coeffs = _product_expansion(roots.as_array())[1:]
    if not np.all(np.isfinite(coeffs)):
        raise CoefficientOverflowError(
            f"Elementary symmetric functions of {roots.n} zeros overflowed"
        )
    return CoeffVector.from_array(coeffs)


def evaluate(poly: MonicPolynomial, z: complex) -> complex:
    value = 1 + 0j
    for coeff in poly.coeffs:
        value = value * z + coeff
    return value
