import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polygen.analysis.distance import set_distance
from polygen.errors import DegreeError, NonFiniteError
from polygen.numerics.roots import zeros_from_coefficients
from polygen.numerics.scalars import principal_sqrt
from polygen.numerics.vieta import coefficients_from_zeros
from polygen.primitives.polynomial import CoeffVector, OrderedVector, RootSet
from polygen.seeds.oracles import quadratic_zeros


def test_zeros_of_z_squared_minus_one() -> None:
    # Act
    roots = zeros_from_coefficients(CoeffVector((0, -1)))

    # Assert
    assert set_distance(roots, RootSet((1, -1))) < 1e-12
    assert not roots.non_generic


def test_double_root_is_flagged_non_generic() -> None:
    # Act
    roots = zeros_from_coefficients(CoeffVector((-2, 1)))

    # Assert
    assert all(abs(root - 1) < 1e-6 for root in roots)
    assert roots.non_generic


def test_close_simple_roots_stay_distinct() -> None:
    # Arrange
    expected = RootSet((1, 1 + 1e-7))

    # Act
    roots = zeros_from_coefficients(coefficients_from_zeros(expected))

    # Assert
    assert set_distance(roots, expected) <= 1e-8
    assert not roots.non_generic


def test_hint_fixes_the_presentation_order() -> None:
    # Arrange
    coeffs = CoeffVector((0, -1))

    # Act
    plus_first = zeros_from_coefficients(coeffs, OrderedVector((1.1, -0.9)))
    minus_first = zeros_from_coefficients(coeffs, OrderedVector((-1.1, 0.9)))

    # Assert
    assert abs(plus_first.roots[0] - 1) < 1e-12
    assert abs(minus_first.roots[0] + 1) < 1e-12


def test_first_step_of_the_isochronous_example_matches_quadratic_formula() -> None:
    # Arrange
    a = (cmath.exp(2j * math.pi / 3), cmath.exp(4j * math.pi / 5))
    y0 = coefficients_from_zeros(RootSet((-1 - 1j, 1)))
    y1 = CoeffVector((a[0] * y0[0] + 1, a[1] * y0[1] + 2))

    # Act
    roots = zeros_from_coefficients(y1)

    # Assert
    expected = RootSet(quadratic_zeros(y1[0], y1[1]))
    assert set_distance(roots, expected) < 1e-12


def test_quintic_with_known_roots() -> None:
    # Arrange
    known = RootSet((2, -1, 0.5j, -0.5j, 3 + 1j))

    # Act
    roots = zeros_from_coefficients(coefficients_from_zeros(known))

    # Assert
    assert set_distance(roots, known) < 1e-10


def test_linear_polynomial_is_rejected() -> None:
    with pytest.raises(DegreeError):
        zeros_from_coefficients(CoeffVector((1,)))


def test_non_finite_coefficients_are_rejected() -> None:
    with pytest.raises(NonFiniteError):
        CoeffVector((math.inf, 0))


@pytest.mark.parametrize(
    ("z", "expected"),
    [
        (4, 2),
        (-1, 1j),
        (complex(-1, -0.0), 1j),
        (2j, 1 + 1j),
    ],
)
def test_principal_square_root_branch(z: complex, expected: complex) -> None:
    # Act
    root = principal_sqrt(z)

    # Assert
    assert root == pytest.approx(expected, abs=1e-15)
    assert root.real > 0 or (root.real == 0 and root.imag >= 0)


@given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
def test_principal_square_root_is_on_the_principal_branch(z: complex) -> None:
    # Act
    root = principal_sqrt(z)

    # Assert
    assert root.real > 0 or (root.real == 0 and root.imag >= 0)
    assert abs(root * root - z) <= 1e-12 * max(1.0, abs(z))
