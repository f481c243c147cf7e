"""Generation operator: seed coefficients to zero sets, and lifts between
generations."""

import logging
from collections.abc import Sequence

from polygen.constants.types import SolveMode
from polygen.engine.ordering_rules import order_trajectory
from polygen.errors import CardinalityMismatchError, GenerationSpecError, SeedSpecError
from polygen.numerics.ordering import permutation_index_of
from polygen.numerics.roots import zeros_from_coefficients
from polygen.numerics.vieta import coefficients_from_zeros
from polygen.primitives.polynomial import CoeffVector, OrderedVector, RootSet
from polygen.primitives.seeds import SeedSpec
from polygen.primitives.trajectory import (
    GenerationSpec,
    OrderingRule,
    Trajectory,
    TrajectoryMeta,
)
from polygen.seeds.recursions import seed_closed_form, seed_step, seed_time_stamps

logger = logging.getLogger(__name__)


def _hint_from(state: RootSet) -> OrderedVector:
    return OrderedVector(state.roots)


def _advance(
    history: Sequence[RootSet],
    spec: SeedSpec,
    ell: int,
    hint: OrderedVector | None,
) -> tuple[RootSet, CoeffVector]:
    coefficients = [coefficients_from_zeros(state) for state in history]
    updated = seed_step(spec, coefficients, ell)
    if hint is None:
        hint = _hint_from(history[-1])
    return zeros_from_coefficients(updated, hint), updated


def generation_zero_step(
    history: Sequence[RootSet],
    spec: SeedSpec,
    ell: int,
    hint: OrderedVector | None = None,
) -> RootSet:
    """Zero set at ``ell + p`` from the zero sets at ``ell .. ell+p-1``.

    The coefficients of each historical set are symmetric functions of its
    zeros, so the result does not depend on how the sets are presented.
    Without a hint the last historical set warm-starts the root finder.
    """
    _check_history(history, spec)
    roots, _ = _advance(history, spec, ell, hint)
    return roots


def _check_history(history: Sequence[RootSet], spec: SeedSpec) -> None:
    if len(history) != spec.order:
        raise SeedSpecError(
            f"Seed of order {spec.order} needs {spec.order} initial sets, "
            f"got {len(history)}"
        )
    for state in history:
        if state.n != spec.arity:
            raise CardinalityMismatchError(spec.arity, state.n)


def _build_trajectory(
    generation: GenerationSpec,
    states: list[RootSet],
    coefficients: list[CoeffVector],
) -> Trajectory:
    flags = tuple(state.non_generic for state in states)
    if any(flags):
        logger.warning(
            "Generation %d trajectory is non-generic at %d of %d steps",
            generation.depth,
            sum(flags),
            len(states),
        )
    meta = TrajectoryMeta(
        generation=generation,
        times=seed_time_stamps(generation.seed, len(states)),
        non_generic=flags,
        ambiguous=(False,) * len(states),
    )
    return Trajectory(tuple(states), tuple(coefficients), meta)


def solve_initial_value(
    spec: GenerationSpec,
    initial: Sequence[RootSet],
    steps: int,
    mode: SolveMode = "closed-form",
) -> Trajectory:
    """Generation-zero trajectory ``x(0) .. x(steps)``.

    ``closed-form`` evaluates the seed solution at every step and root-finds
    it; ``iterated`` applies ``generation_zero_step`` repeatedly. The initial
    sets are kept exactly as supplied.
    """
    if spec.depth != 0:
        raise GenerationSpecError(
            f"solve_initial_value works at depth 0, got depth {spec.depth}"
        )
    if steps < 0:
        raise GenerationSpecError(f"Step count must be non-negative, got {steps}")
    seed = spec.seed
    _check_history(initial, seed)
    p = seed.order
    states = list(initial[: steps + 1])
    coefficients = [coefficients_from_zeros(state) for state in states]
    initial_coefficients = [coefficients_from_zeros(state) for state in initial]

    for ell in range(p, steps + 1):
        hint = _hint_from(states[-1])
        if mode == "closed-form":
            updated = seed_closed_form(seed, initial_coefficients, ell)
            roots = zeros_from_coefficients(updated, hint)
        elif mode == "iterated":
            roots, updated = _advance(states[-p:], seed, ell - p, hint)
        else:
            raise GenerationSpecError(f"Unknown solve mode {mode!r}")
        states.append(roots)
        coefficients.append(updated)
    logger.info(
        "Solved generation zero: kind=%s N=%d steps=%d mode=%s",
        seed.kind,
        seed.arity,
        steps,
        mode,
    )
    return _build_trajectory(spec, states, coefficients)


def lift_generation(lower: Trajectory, rule: OrderingRule) -> Trajectory:
    """Next generation: ordered zeros of ``lower`` become coefficients.

    Each lifted polynomial is root-found with the previous step's zeros as
    hint. Lifted sets may be non-generic even when ``lower`` is; they are
    flagged, not rejected.
    """
    if lower.n < 2:
        raise GenerationSpecError("Lifting needs zero sets with N >= 2")
    ordered = order_trajectory(lower, rule)
    assert ordered.ordered is not None
    states: list[RootSet] = []
    coefficients: list[CoeffVector] = []
    hint: OrderedVector | None = None
    for vector in ordered.ordered:
        lifted = CoeffVector(vector.entries)
        roots = zeros_from_coefficients(lifted, hint)
        states.append(roots)
        coefficients.append(lifted)
        hint = _hint_from(roots)
    generation = lower.meta.generation.lifted(rule)
    trajectory = _build_trajectory(generation, states, coefficients)
    meta = TrajectoryMeta(
        generation=generation,
        times=lower.meta.times,
        non_generic=trajectory.meta.non_generic,
        ambiguous=ordered.meta.ambiguous,
    )
    return Trajectory(trajectory.states, trajectory.coefficients, meta)


def solve_generation(
    spec: GenerationSpec,
    initial: Sequence[RootSet],
    steps: int,
    mode: SolveMode = "closed-form",
) -> tuple[Trajectory, ...]:
    """All generations ``0 .. spec.depth`` started from generation-zero data."""
    levels = [solve_initial_value(spec.base(), initial, steps, mode)]
    for rule in spec.ordering:
        levels.append(lift_generation(levels[-1], rule))
    return tuple(levels)


def descend_initial_data(
    top_initial: Sequence[RootSet], depth: int
) -> tuple[list[RootSet], list[OrderingRule]]:
    """Generation-zero data and lift rules reproducing top-level zero sets.

    The coefficients of each generation-k set, read as an ordered vector, are
    the generation-(k-1) zeros; the permutation index relating that vector to
    the lexicographic order fixes the rule of the lift.
    """
    current = list(top_initial)
    rules: list[OrderingRule] = []
    for level in range(depth, 0, -1):
        vectors = [coefficients_from_zeros(state) for state in current]
        indices = [permutation_index_of(vector) for vector in vectors]
        if len({index.mu for index in indices}) > 1:
            logger.warning(
                "Initial sets at generation %d imply different orderings %s; "
                "using mu=%d",
                level,
                [index.mu for index in indices],
                indices[0].mu,
            )
        rules.append(OrderingRule("fixed-mu", index=indices[0]))
        current = [RootSet(vector.entries) for vector in vectors]
    rules.reverse()
    return current, rules


def solve_from_top_generation(
    seed: SeedSpec,
    depth: int,
    top_initial: Sequence[RootSet],
    steps: int,
    mode: SolveMode = "closed-form",
) -> tuple[Trajectory, ...]:
    """All generations ``0 .. depth`` for initial data given at ``depth``.

    The top-level trajectory starts exactly at ``top_initial``.
    """
    base_initial, rules = descend_initial_data(top_initial, depth)
    for level, rule in enumerate(rules, start=1):
        assert rule.index is not None
        logger.info("Generation %d lifts with mu=%d", level, rule.index.mu)
    spec = GenerationSpec(seed, depth, tuple(rules))
    levels = list(solve_generation(spec, base_initial, steps, mode))
    levels[-1] = levels[-1].with_initial_states(tuple(top_initial[: steps + 1]))
    return tuple(levels)

