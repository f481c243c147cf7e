import numpy as np
import pytest

from polygen.analysis.distance import set_distance
from polygen.analysis.periods import detect_period
from polygen.constants.presets import PRESETS
from polygen.engine.generation import (
    descend_initial_data,
    generation_zero_step,
    lift_generation,
    solve_from_top_generation,
    solve_generation,
    solve_initial_value,
)
from polygen.errors import (
    CardinalityMismatchError,
    GenerationSpecError,
    SeedSpecError,
)
from polygen.helpers.helpers import rotation_multiplier
from polygen.numerics.roots import zeros_from_coefficients
from polygen.numerics.vieta import coefficients_from_zeros
from polygen.primitives.polynomial import RootSet
from polygen.primitives.seeds import (
    AffineParams,
    CyclicSchedule,
    NonautonomousParams,
    SecondOrderParams,
    SeedSpec,
)
from polygen.primitives.trajectory import GenerationSpec, OrderingRule
from polygen.seeds.oracles import quadratic_zeros
from polygen.seeds.recursions import affine_seed, q_affine_wrap, seed_closed_form
from tests.helpers import START, random_generic_roots


def test_identity_seed_keeps_the_zero_set(start: RootSet) -> None:
    # Arrange
    spec = affine_seed((1, 1), (0, 0))

    # Act
    roots = generation_zero_step([start], spec, 0)

    # Assert
    assert set_distance(roots, start) < 1e-14


def test_first_step_of_the_isochronous_example(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Arrange
    y1 = rotation_multiplier(1, 3) * 1j + 1
    y2 = rotation_multiplier(2, 5) * (-1 - 1j) + 2

    # Act
    roots = generation_zero_step([start], isochronous_seed, 0)

    # Assert
    assert set_distance(roots, RootSet(quadratic_zeros(y1, y2))) < 1e-12


def test_second_order_step_matches_closed_form_zeros(
    second_order_seed: SeedSpec, second_order_start: tuple[RootSet, RootSet]
) -> None:
    # Arrange
    history = list(second_order_start)
    initial = [coefficients_from_zeros(state) for state in history]

    # Act
    roots = generation_zero_step(history, second_order_seed, 0)

    # Assert
    expected = zeros_from_coefficients(seed_closed_form(second_order_seed, initial, 2))
    assert set_distance(roots, expected) < 1e-10


def test_history_length_must_match_seed_order(
    second_order_seed: SeedSpec, start: RootSet
) -> None:
    with pytest.raises(SeedSpecError):
        generation_zero_step([start], second_order_seed, 0)


def test_history_cardinality_must_match_arity(isochronous_seed: SeedSpec) -> None:
    with pytest.raises(CardinalityMismatchError):
        generation_zero_step([RootSet((1, 2, 3))], isochronous_seed, 0)


def test_isochronous_example_returns_after_fifteen_steps(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Act
    trajectory = solve_initial_value(GenerationSpec(isochronous_seed), [start], 45)

    # Assert
    states = trajectory.states
    assert states[0] is start
    assert len(trajectory) == 46
    assert max(set_distance(states[ell + 15], states[ell]) for ell in range(31)) <= 1e-9
    for lag in range(1, 15):
        gaps = [set_distance(states[ell + lag], states[ell]) for ell in range(31)]
        assert max(gaps) > 1e-6


def test_iterated_and_closed_form_modes_agree_on_the_reference_example(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Arrange
    spec = GenerationSpec(isochronous_seed)

    # Act
    iterated = solve_initial_value(spec, [start], 100, "iterated")
    closed = solve_initial_value(spec, [start], 100, "closed-form")

    # Assert
    gaps = [
        set_distance(a, b) for a, b in zip(iterated.states, closed.states, strict=True)
    ]
    assert max(gaps) <= 1e-9


def test_iterated_and_closed_form_modes_agree_on_random_seeds(
    rng: np.random.Generator,
) -> None:
    compared = 0
    for draw in range(50):
        # Arrange
        n = (2, 3, 5)[draw % 3]
        modulus = rng.uniform(0.5, 1.0, size=n)
        a = modulus * np.exp(2j * np.pi * rng.uniform(size=n))
        b = rng.normal(size=n) + 1j * rng.normal(size=n)
        spec = GenerationSpec(affine_seed(tuple(a), tuple(b)))
        initial = [random_generic_roots(rng, n)]

        # Act
        iterated = solve_initial_value(spec, initial, 100, "iterated")
        closed = solve_initial_value(spec, initial, 100, "closed-form")

        # Assert
        for left, right in zip(iterated.states, closed.states, strict=True):
            scale = 1.0 + max(abs(root) for root in right)
            if right.min_separation < 0.05 * scale:
                continue
            compared += 1
            assert set_distance(left, right) <= 1e-9 * scale
    assert compared > 0


def test_lifting_a_constant_trajectory_stays_constant(start: RootSet) -> None:
    # Arrange
    spec = GenerationSpec(affine_seed((1, 1), (0, 0)))
    lower = solve_initial_value(spec, [start], 6)

    # Act
    lifted = lift_generation(lower, OrderingRule.lexicographic())

    # Assert
    assert lifted.depth == 1
    assert all(set_distance(state, lifted.states[0]) < 1e-12 for state in lifted)


def test_lift_uses_ordered_zeros_as_coefficients(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Arrange
    lower = solve_initial_value(GenerationSpec(isochronous_seed), [start], 10)

    # Act
    lifted = lift_generation(lower, OrderingRule.fixed(2, 2))

    # Assert
    for state, coeffs in zip(lower.states, lifted.coefficients, strict=True):
        assert set_distance(state, RootSet(coeffs.entries)) == 0
        assert coeffs[0].real >= coeffs[1].real
    assert lifted.meta.generation.ordering == (OrderingRule.fixed(2, 2),)


def test_descending_the_reference_start_set_recovers_generation_zero_data(
    start: RootSet,
) -> None:
    # Act
    base, rules = descend_initial_data([start], 1)

    # Assert
    assert set_distance(base[0], RootSet((1j, -1 - 1j))) == 0
    assert rules == [OrderingRule.fixed(2, 2)]


def test_top_generation_starts_from_the_given_sets(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Act
    levels = solve_from_top_generation(isochronous_seed, 2, [start], 60)

    # Assert
    assert [level.depth for level in levels] == [0, 1, 2]
    assert levels[-1].states[0] is start
    report = detect_period(levels[-1], 20)
    assert report.verdict == "exact-periodic"
    assert report.period == 15


def test_first_generation_from_generation_zero_data_is_periodic(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Arrange
    spec = GenerationSpec(isochronous_seed, 1, (OrderingRule.lexicographic(),))

    # Act
    levels = solve_generation(spec, [start], 60)

    # Assert
    report = detect_period(levels[1], 20)
    assert report.verdict == "exact-periodic"
    assert report.period == 15


def test_depth_and_rules_must_agree(isochronous_seed: SeedSpec) -> None:
    with pytest.raises(GenerationSpecError):
        GenerationSpec(isochronous_seed, 2, (OrderingRule.lexicographic(),))


def test_head_keeps_the_leading_states(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Arrange
    trajectory = solve_initial_value(GenerationSpec(isochronous_seed), [start], 20)

    # Act
    window = trajectory.head(16)

    # Assert
    assert len(window) == 16
    assert window.states == trajectory.states[:16]
    assert len(window.meta.times) == 16
    with pytest.raises(GenerationSpecError):
        trajectory.head(0)


def _seeded_case(kind: str) -> tuple[GenerationSpec, list[RootSet]]:
    """A bounded two-root trajectory for each seed kind."""
    isochronous = AffineParams.from_multipliers(
        PRESETS["1a"].multipliers, PRESETS["1a"].offsets
    )
    if kind == "affine":
        return GenerationSpec(SeedSpec("affine", isochronous, 2)), [START]
    if kind == "q-affine":
        return GenerationSpec(q_affine_wrap(isochronous, 2.0)), [START]
    if kind == "nonautonomous-linear":
        g = CyclicSchedule(
            (
                (rotation_multiplier(1, 3), rotation_multiplier(2, 5)),
                (rotation_multiplier(1, 7), rotation_multiplier(1, 4)),
            )
        )
        h = CyclicSchedule(((1, 2), (0.5j, -1)))
        seed = SeedSpec("nonautonomous-linear", NonautonomousParams(g, h), 2)
        return GenerationSpec(seed), [START]
    example = PRESETS["4"]
    params = SecondOrderParams.from_multipliers(example.multipliers, example.offsets)
    seed = SeedSpec("second-order-multiplicative", params, 2)
    return GenerationSpec(seed), [RootSet(state) for state in example.initial]


@pytest.mark.parametrize(
    "kind",
    ["affine", "q-affine", "nonautonomous-linear", "second-order-multiplicative"],
)
def test_iterated_and_closed_form_modes_agree_for_every_seed_kind(kind: str) -> None:
    # Arrange
    spec, initial = _seeded_case(kind)

    # Act
    iterated = solve_initial_value(spec, initial, 100, "iterated")
    closed = solve_initial_value(spec, initial, 100, "closed-form")

    # Assert
    compared = 0
    for left, right in zip(iterated.states, closed.states, strict=True):
        scale = 1.0 + max(abs(root) for root in right)
        if right.min_separation < 1e-3 * scale:
            continue
        compared += 1
        assert set_distance(left, right) <= 1e-9 * scale
    assert compared >= 90


@pytest.mark.parametrize("kind", ["affine", "second-order-multiplicative"])
def test_generation_zero_step_ignores_how_the_history_is_presented(
    kind: str, rng: np.random.Generator
) -> None:
    spec, _ = _seeded_case(kind)
    for ell in range(20):
        # Arrange
        history = [random_generic_roots(rng, 2) for _ in range(spec.seed.order)]
        shuffled = [
            RootSet(tuple(state.roots[k] for k in rng.permutation(state.n)))
            for state in history
        ]

        # Act
        roots = generation_zero_step(history, spec.seed, ell)
        reordered = generation_zero_step(shuffled, spec.seed, ell)

        # Assert
        assert set_distance(roots, reordered) <= 1e-9
