import cmath
import math

import pytest

from polygen.analysis.taxonomy import (
    ModulusMarker,
    classify_component,
    classify_parameters,
    predicted_period,
)
from polygen.primitives.seeds import AffineParams, RationalRotation


def test_exact_rotations_are_isochronous() -> None:
    # Arrange
    params = AffineParams.from_multipliers(((1.0, 1, 3), (1.0, 2, 5)), (1, 2))

    # Act
    report = classify_parameters(params)

    # Assert
    assert report.label == "isochronous"
    assert report.predicted_period == 15
    assert report.components == ("rotation(1/3)", "rotation(2/5)")


def test_rotation_phases_are_recovered_from_floats() -> None:
    # Arrange
    a = (cmath.exp(2j * math.pi / 3), cmath.exp(4j * math.pi / 5))

    # Act
    report = classify_parameters(AffineParams(a, (1, 2)))

    # Assert
    assert report.label == "isochronous"
    assert report.predicted_period == 15


def test_one_contracting_component_is_asymptotically_isochronous() -> None:
    # Arrange
    params = AffineParams.from_multipliers(((1.0, 1, 7), (0.9, 2, 5)), (0.1, 0.2))

    # Act
    report = classify_parameters(params)

    # Assert
    assert report.label == "asymptotically-isochronous"
    assert report.predicted_period == 7
    assert report.limits[0] is None
    assert report.limits[1] == pytest.approx(0.2 / (1 - params.a[1]))


def test_contracting_multipliers_converge_to_their_limits() -> None:
    # Act
    report = classify_parameters(AffineParams((0.5, 0.3), (1, 2)))

    # Assert
    assert report.label == "convergent"
    assert report.predicted_period is None
    assert report.limits == pytest.approx((2.0, 2 / 0.7))


def test_expanding_multiplier_diverges() -> None:
    # Act
    report = classify_parameters(AffineParams((1.1, 0.5), (1, 2)))

    # Assert
    assert report.label == "divergent"
    assert report.predicted_period is None


def test_unit_multiplier_with_offset_drifts() -> None:
    # Act
    drifting = classify_component(1, 2)
    fixed = classify_component(1, 0)

    # Assert
    assert drifting is ModulusMarker.EXPANDING
    assert fixed == RationalRotation(0, 1)


def test_irrational_rotation_is_inconclusive() -> None:
    # Arrange
    a = cmath.exp(2j * math.pi * math.sqrt(2))

    # Act
    report = classify_parameters(AffineParams((a, 0.5), (1, 1)))

    # Assert
    assert report.label == "inconclusive"
    assert report.components[0] == "irrational-rotation"


@pytest.mark.parametrize(
    ("entries", "expected"),
    [
        ((RationalRotation(1, 3), RationalRotation(2, 5)), 15),
        ((RationalRotation(1, 7), ModulusMarker.CONTRACTING), 7),
        ((RationalRotation(0, 1), RationalRotation(0, 1)), 1),
        ((ModulusMarker.CONTRACTING, ModulusMarker.CONTRACTING), None),
        ((RationalRotation(1, 2), ModulusMarker.EXPANDING), None),
    ],
)
def test_predicted_period(
    entries: tuple[RationalRotation | ModulusMarker, ...], expected: int | None
) -> None:
    assert predicted_period(entries) == expected
