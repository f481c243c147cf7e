import itertools
import math
from collections.abc import Callable
from random import Random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polygen.engine.generation import solve_generation, solve_initial_value
from polygen.engine.ordering_rules import (
    apply_ordering,
    minimum_distance_assignment,
    order_trajectory,
)
from polygen.errors import OrderingRuleError, PermutationIndexError
from polygen.numerics.ordering import (
    index_of_permutation,
    lexicographic_order,
    order_by_mu,
    permutation_by_index,
    permutation_index_of,
)
from polygen.primitives.polynomial import OrderedVector, PermutationIndex, RootSet
from polygen.primitives.seeds import SeedSpec
from polygen.primitives.trajectory import GenerationSpec, OrderingRule

bounded = st.complex_numbers(max_magnitude=100.0, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize(
    ("roots", "expected"),
    [
        ((1, -1 - 1j), (-1 - 1j, 1)),
        ((1j, -1j), (-1j, 1j)),
        ((2, 1 + 1j, 1 - 1j), (1 - 1j, 1 + 1j, 2)),
    ],
)
def test_lexicographic_order(
    roots: tuple[complex, ...], expected: tuple[complex, ...]
) -> None:
    # Act
    vector = lexicographic_order(RootSet(roots))

    # Assert
    assert vector.entries == expected


@pytest.mark.parametrize(
    ("mu", "expected"),
    [(1, (0, 1, 2)), (2, (0, 2, 1)), (3, (1, 0, 2)), (6, (2, 1, 0))],
)
def test_permutation_by_index_follows_lexicographic_listing(
    mu: int, expected: tuple[int, ...]
) -> None:
    # Act
    permutation = permutation_by_index(PermutationIndex(mu, 3))

    # Assert
    assert permutation == expected


def test_index_of_permutation_inverts_permutation_by_index() -> None:
    for mu in range(1, math.factorial(4) + 1):
        # Arrange
        idx = PermutationIndex(mu, 4)

        # Act
        back = index_of_permutation(permutation_by_index(idx))

        # Assert
        assert back == idx


@pytest.mark.parametrize("mu", [0, 7])
def test_permutation_index_out_of_range(mu: int) -> None:
    with pytest.raises(PermutationIndexError):
        PermutationIndex(mu, 3)


def test_order_by_mu_for_two_roots() -> None:
    # Arrange
    roots = RootSet((1, -1 - 1j))

    # Act
    first = order_by_mu(roots, PermutationIndex(1, 2))
    second = order_by_mu(roots, PermutationIndex(2, 2))

    # Assert
    assert first.entries == (-1 - 1j, 1)
    assert second.entries == (1, -1 - 1j)


def test_highest_index_reverses_lexicographic_order() -> None:
    # Arrange
    roots = RootSet((0.3 + 2j, -1.5, 0.3 - 1j))

    # Act
    vector = order_by_mu(roots, PermutationIndex(6, 3))

    # Assert
    assert vector.entries == tuple(reversed(lexicographic_order(roots).entries))


def test_permutation_index_of_recovers_mu() -> None:
    roots = RootSet((2 - 1j, -0.5 + 0.5j, 1j))
    for mu in range(1, 7):
        # Arrange
        vector = order_by_mu(roots, PermutationIndex(mu, 3))

        # Act
        idx = permutation_index_of(vector)

        # Assert
        assert idx.mu == mu


def test_contiguity_picks_the_unique_nearest_matching() -> None:
    # Act
    result = apply_ordering(
        OrderedVector((0, 10)), RootSet((10.1, 0.2)), OrderingRule.contiguity()
    )

    # Assert
    assert result.vector.entries == (0.2, 10.1)
    assert not result.ambiguous


def test_contiguity_flags_an_ambiguous_match() -> None:
    # Act
    result = apply_ordering(
        OrderedVector((0, 1)), RootSet((0.5, 0.5001)), OrderingRule.contiguity()
    )

    # Assert
    assert result.ambiguous
    assert sorted(abs(entry) for entry in result.vector) == [0.5, 0.5001]


def test_contiguity_without_previous_vector_is_lexicographic() -> None:
    # Act
    result = apply_ordering(None, RootSet((1, -1 - 1j)), OrderingRule.contiguity())

    # Assert
    assert result.vector.entries == (-1 - 1j, 1)
    assert not result.ambiguous


def test_lexicographic_rule_ignores_previous_vector() -> None:
    # Act
    result = apply_ordering(
        OrderedVector((1, -1 - 1j)),
        RootSet((1, -1 - 1j)),
        OrderingRule.lexicographic(),
    )

    # Assert
    assert result.vector.entries == (-1 - 1j, 1)


def test_brute_force_agrees_with_hungarian(rng: np.random.Generator) -> None:
    for _ in range(50):
        # Arrange
        n = int(rng.integers(2, 6))
        prev = OrderedVector(tuple(rng.normal(size=n) + 1j * rng.normal(size=n)))
        current = RootSet(tuple(rng.normal(size=n) + 1j * rng.normal(size=n)))

        # Act
        hungarian = minimum_distance_assignment(prev, current)
        brute = minimum_distance_assignment(prev, current, "brute-force")

        # Assert
        assert hungarian == brute


def test_brute_force_is_limited_to_small_sets() -> None:
    # Arrange
    roots = tuple(complex(k) for k in range(7))

    # Act / Assert
    with pytest.raises(OrderingRuleError):
        minimum_distance_assignment(
            OrderedVector(roots), RootSet(roots), "brute-force"
        )


def test_random_rule_is_reproducible_and_permutes_each_state(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Arrange
    trajectory = solve_initial_value(GenerationSpec(isochronous_seed), (start,), 12)
    rule = OrderingRule.random(7)

    # Act
    first = order_trajectory(trajectory, rule)
    second = order_trajectory(trajectory, rule)

    # Assert
    assert first.ordered == second.ordered
    assert first.ordered is not None
    for vector, state in zip(first.ordered, trajectory.states, strict=True):
        assert sorted(vector, key=lambda z: (z.real, z.imag)) == sorted(
            state, key=lambda z: (z.real, z.imag)
        )


@pytest.mark.parametrize(
    "make",
    [
        lambda: OrderingRule("random"),
        lambda: OrderingRule("fixed-mu"),
        lambda: OrderingRule("lexicographic", rng_seed=3),
        lambda: OrderingRule("contiguity", index=PermutationIndex(1, 2)),
    ],
)
def test_malformed_ordering_rules_are_rejected(
    make: Callable[[], OrderingRule],
) -> None:
    with pytest.raises(OrderingRuleError):
        make()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_permutation_index_is_a_bijection(n: int) -> None:
    # Arrange
    indices = [PermutationIndex(mu, n) for mu in range(1, math.factorial(n) + 1)]

    # Act
    permutations = [permutation_by_index(idx) for idx in indices]

    # Assert
    assert permutations == sorted(itertools.permutations(range(n)))
    assert [index_of_permutation(p) for p in permutations] == indices


@given(st.lists(bounded, min_size=1, max_size=7), st.randoms())
def test_lexicographic_order_ignores_presentation(
    values: list[complex], random: Random
) -> None:
    # Arrange
    shuffled = list(values)
    random.shuffle(shuffled)

    # Act
    vector = lexicographic_order(RootSet(tuple(values)))

    # Assert
    assert lexicographic_order(RootSet(tuple(shuffled))).entries == vector.entries
    assert lexicographic_order(RootSet(vector.entries)).entries == vector.entries


def test_random_rule_lifts_bit_for_bit_under_a_fixed_seed(
    isochronous_seed: SeedSpec, start: RootSet
) -> None:
    # Arrange
    spec = GenerationSpec(isochronous_seed, 1, (OrderingRule.random(11),))
    initial = (start,)

    # Act
    first = solve_generation(spec, initial, 30)[-1]
    second = solve_generation(spec, initial, 30)[-1]

    # Assert
    assert first.states == second.states
    assert first.coefficients == second.coefficients
