"""Frozen parameter blocks of the eight reference examples.

Multipliers are stored as ``(modulus, q, p)`` so ``exp(2*pi*i*q/p)`` is always
computed from integers and never typed as a decimal.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Literal

PresetName = Literal["1a", "1b", "1c", "2a", "2b", "3a", "3b", "4"]
GammaReading = Literal["half-arctan", "arctan-of-half"]

Multiplier = tuple[float, int, int]


@dataclass(frozen=True)
class ExamplePreset:
    name: str
    seed_kind: Literal["affine", "second-order-multiplicative"]
    multipliers: tuple[Multiplier, ...]
    offsets: tuple[complex, ...]
    depth: int
    ordering: Literal["lexicographic", "contiguity"]
    # one root set per seed order
    initial: tuple[tuple[complex, ...], ...]
    figure_steps: int
    analysis_steps: int
    max_period: int
    expected_verdict: str
    expected_period: int
    plane_plot: bool = False


_ISOCHRONOUS: tuple[Multiplier, ...] = ((1.0, 1, 3), (1.0, 2, 5))
_ASYMPTOTIC: tuple[Multiplier, ...] = ((1.0, 1, 7), (0.9, 2, 5))
_CONTIGUITY: tuple[Multiplier, ...] = ((0.1, 1, 3), (1.0, 1, 25))
_SECOND_ORDER: tuple[Multiplier, ...] = ((1.0, 1, 2), (1.0, 1, 4))

_START: tuple[tuple[complex, ...], ...] = ((-1 - 1j, 1 + 0j),)


def example4_initial_roots(
    reading: GammaReading = "half-arctan",
) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """Initial root pairs of the second-order example.

    ``reading`` selects how the angle of gamma is parsed: half of arctan(4)
    (the reading that satisfies the periodicity conditions) or arctan(4/2).
    """
    angle = math.atan(4.0) / 2 if reading == "half-arctan" else math.atan(4.0 / 2)
    gamma = cmath.exp(1j * angle)
    s = 17.0**0.25
    # principal fourth root of -3
    root_minus_three = 3.0**0.25 * cmath.exp(1j * math.pi / 4)
    x1_0 = -(s + gamma) / (s + (1 + 2j) * gamma - 2 * root_minus_three * gamma)
    x1_1 = (1 + 1j - 3.0**0.25 * cmath.exp(1j * math.pi / 4)) * x1_0
    return (x1_0, 1 + 0j), (x1_1, 1 + 0j)


PRESETS: dict[str, ExamplePreset] = {
    "1a": ExamplePreset(
        name="1a",
        seed_kind="affine",
        multipliers=_ISOCHRONOUS,
        offsets=(1 + 0j, 2 + 0j),
        depth=0,
        ordering="lexicographic",
        initial=_START,
        figure_steps=15,
        analysis_steps=60,
        max_period=20,
        expected_verdict="exact-periodic",
        expected_period=15,
        plane_plot=True,
    ),
    "1b": ExamplePreset(
        name="1b",
        seed_kind="affine",
        multipliers=_ASYMPTOTIC,
        offsets=(0.1 + 0j, 0.2 + 0j),
        depth=0,
        ordering="lexicographic",
        initial=_START,
        figure_steps=60,
        analysis_steps=250,
        max_period=20,
        expected_verdict="asymptotically-periodic",
        expected_period=7,
    ),
    "1c": ExamplePreset(
        name="1c",
        seed_kind="affine",
        multipliers=_CONTIGUITY,
        offsets=(1 + 0j, 1 + 0j),
        depth=0,
        ordering="contiguity",
        initial=_START,
        figure_steps=25,
        analysis_steps=160,
        max_period=30,
        expected_verdict="asymptotically-periodic",
        expected_period=25,
        plane_plot=True,
    ),
    "2a": ExamplePreset(
        name="2a",
        seed_kind="affine",
        multipliers=_ISOCHRONOUS,
        offsets=(1 + 0j, 2 + 0j),
        depth=1,
        ordering="lexicographic",
        initial=_START,
        figure_steps=30,
        analysis_steps=60,
        max_period=20,
        expected_verdict="exact-periodic",
        expected_period=15,
    ),
    "2b": ExamplePreset(
        name="2b",
        seed_kind="affine",
        multipliers=_ASYMPTOTIC,
        offsets=(0.1 + 0j, 0.2 + 0j),
        depth=1,
        ordering="lexicographic",
        initial=_START,
        figure_steps=60,
        analysis_steps=250,
        max_period=20,
        expected_verdict="asymptotically-periodic",
        expected_period=7,
    ),
    "3a": ExamplePreset(
        name="3a",
        seed_kind="affine",
        multipliers=_ISOCHRONOUS,
        offsets=(1 + 0j, 2 + 0j),
        depth=2,
        ordering="lexicographic",
        initial=_START,
        figure_steps=30,
        analysis_steps=60,
        max_period=20,
        expected_verdict="exact-periodic",
        expected_period=15,
    ),
    "3b": ExamplePreset(
        name="3b",
        seed_kind="affine",
        multipliers=_ASYMPTOTIC,
        offsets=(0.1 + 0j, 0.2 + 0j),
        depth=2,
        ordering="lexicographic",
        initial=_START,
        figure_steps=60,
        analysis_steps=250,
        max_period=20,
        expected_verdict="asymptotically-periodic",
        expected_period=7,
    ),
    "4": ExamplePreset(
        name="4",
        seed_kind="second-order-multiplicative",
        multipliers=_SECOND_ORDER,
        offsets=(1 + 0j, 2 + 0j),
        depth=0,
        ordering="lexicographic",
        initial=example4_initial_roots(),
        figure_steps=32,
        analysis_steps=40,
        max_period=10,
        expected_verdict="exact-periodic",
        expected_period=8,
    ),
}
