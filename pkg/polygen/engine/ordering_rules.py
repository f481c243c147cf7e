"""Ordering rules that turn unordered zero sets into coefficient vectors."""

import itertools
import logging
from typing import NamedTuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from polygen.constants.tolerances import BRUTE_FORCE_MAX_N
from polygen.constants.types import AssignmentMethod, FloatArray
from polygen.errors import CardinalityMismatchError, OrderingRuleError
from polygen.numerics.ordering import lexicographic_order, order_by_mu
from polygen.primitives.polynomial import OrderedVector, RootSet
from polygen.primitives.trajectory import OrderingRule, Trajectory

logger = logging.getLogger(__name__)


class OrderingResult(NamedTuple):
    vector: OrderedVector
    ambiguous: bool


def _distance_matrix(prev: OrderedVector, current: RootSet) -> FloatArray:
    return np.abs(prev.as_array()[:, None] - current.as_array()[None, :])


def minimum_distance_assignment(
    prev: OrderedVector,
    current: RootSet,
    method: AssignmentMethod = "hungarian",
) -> tuple[int, ...]:
    """Index of the current root matched to each previous slot.

    Minimises the summed distance; ``brute-force`` enumerates all N!
    assignments and is limited to small N.
    """
    if prev.n != current.n:
        raise CardinalityMismatchError(prev.n, current.n)
    cost = _distance_matrix(prev, current)
    if method == "hungarian":
        _, columns = linear_sum_assignment(cost)
        return tuple(int(column) for column in columns)
    if method != "brute-force":
        raise OrderingRuleError(f"Unknown assignment method {method!r}")
    if prev.n > BRUTE_FORCE_MAX_N:
        raise OrderingRuleError(
            f"Brute-force assignment is limited to N <= {BRUTE_FORCE_MAX_N}"
        )
    slots = np.arange(prev.n)
    best = min(
        itertools.permutations(range(prev.n)),
        key=lambda columns: float(cost[slots, list(columns)].sum()),
    )
    return tuple(best)


def _violates_contiguity(cost: FloatArray, columns: tuple[int, ...]) -> bool:
    """True when some matched root is not strictly closest to its own slot."""
    for slot, column in enumerate(columns):
        own = cost[slot, column]
        others = np.delete(cost[:, column], slot)
        if others.size and not np.all(own < others):
            return True
    return False


def apply_ordering(
    prev: OrderedVector | None,
    current: RootSet,
    rule: OrderingRule,
    rng: np.random.Generator | None = None,
) -> OrderingResult:
    """Order ``current`` according to ``rule``.

    Contiguity without a previous vector falls back to the lexicographic
    order. The random rule draws from ``rng`` when given, otherwise from a
    generator seeded with the rule's seed.
    """
    if rule.kind == "lexicographic":
        return OrderingResult(lexicographic_order(current), False)
    if rule.kind == "fixed-mu":
        assert rule.index is not None
        return OrderingResult(order_by_mu(current, rule.index), False)
    if rule.kind == "random":
        generator = rng if rng is not None else np.random.default_rng(rule.rng_seed)
        base = lexicographic_order(current)
        shuffled = generator.permutation(current.n)
        return OrderingResult(
            OrderedVector(tuple(base.entries[int(k)] for k in shuffled)), False
        )
    if prev is None:
        return OrderingResult(lexicographic_order(current), False)
    columns = minimum_distance_assignment(prev, current)
    cost = _distance_matrix(prev, current)
    vector = OrderedVector(tuple(current.roots[column] for column in columns))
    return OrderingResult(vector, _violates_contiguity(cost, columns))


def order_trajectory(trajectory: Trajectory, rule: OrderingRule) -> Trajectory:
    """Attach ordered vectors and per-step ambiguity flags to ``trajectory``."""
    rng = np.random.default_rng(rule.rng_seed) if rule.kind == "random" else None
    ordered: list[OrderedVector] = []
    ambiguous: list[bool] = []
    prev: OrderedVector | None = None
    for state in trajectory.states:
        vector, flag = apply_ordering(prev, state, rule, rng)
        ordered.append(vector)
        ambiguous.append(flag)
        prev = vector
    flagged = sum(ambiguous)
    if flagged:
        logger.warning(
            "Contiguity ordering was ambiguous at %d of %d steps", flagged, len(ordered)
        )
    degenerate = sum(trajectory.meta.non_generic)
    if degenerate and rule.kind != "random":
        logger.warning(
            "Ordering %d non-generic states; their order is not well defined",
            degenerate,
        )
    return trajectory.with_ordering(tuple(ordered), tuple(ambiguous), rule)
