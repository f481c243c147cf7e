"""Parameter-based prediction of the long-time behaviour of affine seeds."""

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from polygen.constants.tolerances import (
    ROTATION_DENOMINATOR_BOUND,
    ROTATION_PHASE_TOL,
    UNIT_MODULUS_TOL,
)
from polygen.constants.types import TaxonomyLabel
from polygen.helpers.helpers import lcm_of, rational_phase
from polygen.primitives.seeds import AffineParams, RationalRotation


class ModulusMarker(enum.Enum):
    CONTRACTING = "contracting"
    EXPANDING = "expanding"


ComponentClass = RationalRotation | ModulusMarker | None


@dataclass(frozen=True)
class TaxonomyReport:
    label: TaxonomyLabel
    predicted_period: int | None
    # b_m / (1 - a_m) for contracting components, None elsewhere
    limits: tuple[complex | None, ...]
    components: tuple[str, ...]


def predicted_period(entries: Sequence[RationalRotation | ModulusMarker]) -> int | None:
    """Least common multiple of the rotation denominators.

    None when some component expands or when no component rotates.
    """
    if any(entry is ModulusMarker.EXPANDING for entry in entries):
        return None
    denominators = [
        entry.p for entry in entries if isinstance(entry, RationalRotation)
    ]
    if not denominators:
        return None
    return lcm_of(denominators)


def classify_component(
    a: complex,
    b: complex,
    rotation: RationalRotation | None = None,
) -> ComponentClass:
    """Rotation, modulus marker, or None for an irrational unit multiplier."""
    modulus = abs(a)
    if modulus > 1 + UNIT_MODULUS_TOL:
        return ModulusMarker.EXPANDING
    if modulus < 1 - UNIT_MODULUS_TOL:
        return ModulusMarker.CONTRACTING
    if rotation is None:
        phase = rational_phase(a, ROTATION_DENOMINATOR_BOUND, ROTATION_PHASE_TOL)
        if phase is None:
            return None
        rotation = RationalRotation(phase.numerator, phase.denominator)
    if rotation.p == 1 and b != 0:
        # a = 1 drifts linearly
        return ModulusMarker.EXPANDING
    return rotation


def _describe(component: ComponentClass) -> str:
    if component is None:
        return "irrational-rotation"
    if isinstance(component, ModulusMarker):
        return component.value
    return f"rotation({component.q}/{component.p})"


def classify_parameters(params: AffineParams) -> TaxonomyReport:
    rotations = params.rotations or (None,) * len(params.a)
    components = [
        classify_component(a, b, rotation)
        for a, b, rotation in zip(params.a, params.b, rotations, strict=True)
    ]
    limits = tuple(
        b / (1 - a) if component is ModulusMarker.CONTRACTING else None
        for a, b, component in zip(params.a, params.b, components, strict=True)
    )
    described = tuple(_describe(component) for component in components)

    label: TaxonomyLabel
    if any(component is ModulusMarker.EXPANDING for component in components):
        label = "divergent"
    elif any(component is None for component in components):
        label = "inconclusive"
    elif all(component is ModulusMarker.CONTRACTING for component in components):
        label = "convergent"
    elif all(isinstance(component, RationalRotation) for component in components):
        label = "isochronous"
    else:
        label = "asymptotically-isochronous"

    period = None
    if label in ("isochronous", "asymptotically-isochronous"):
        period = predicted_period(
            [component for component in components if component is not None]
        )
    return TaxonomyReport(label, period, limits, described)
