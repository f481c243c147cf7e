from collections.abc import Iterator
from dataclasses import dataclass, field, replace

import numpy as np

from polygen.constants.types import ComplexArray, OrderingKind
from polygen.errors import GenerationSpecError, OrderingRuleError
from polygen.primitives.polynomial import (
    CoeffVector,
    OrderedVector,
    PermutationIndex,
    RootSet,
)
from polygen.primitives.seeds import SeedSpec

_SEED_LIMIT = 2**64


@dataclass(frozen=True)
class OrderingRule:
    kind: OrderingKind
    index: PermutationIndex | None = None
    rng_seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "fixed-mu" and self.index is None:
            raise OrderingRuleError("fixed-mu ordering needs a permutation index")
        if self.kind != "fixed-mu" and self.index is not None:
            raise OrderingRuleError(f"{self.kind} ordering takes no permutation index")
        if self.kind == "random":
            if self.rng_seed is None or not 0 <= self.rng_seed < _SEED_LIMIT:
                raise OrderingRuleError(
                    "random ordering needs an explicit 64-bit rng seed"
                )
        elif self.rng_seed is not None:
            raise OrderingRuleError(f"{self.kind} ordering takes no rng seed")
        if self.kind not in ("lexicographic", "fixed-mu", "contiguity", "random"):
            raise OrderingRuleError(f"Unknown ordering rule {self.kind!r}")

    @classmethod
    def lexicographic(cls) -> "OrderingRule":
        return cls("lexicographic")

    @classmethod
    def fixed(cls, mu: int, n: int) -> "OrderingRule":
        return cls("fixed-mu", index=PermutationIndex(mu, n))

    @classmethod
    def contiguity(cls) -> "OrderingRule":
        return cls("contiguity")

    @classmethod
    def random(cls, rng_seed: int) -> "OrderingRule":
        return cls("random", rng_seed=rng_seed)

    def describe(self) -> str:
        if self.index is not None:
            return f"fixed-mu({self.index.mu})"
        if self.rng_seed is not None:
            return f"random({self.rng_seed})"
        return self.kind


@dataclass(frozen=True)
class GenerationSpec:
    seed: SeedSpec
    depth: int = 0
    ordering: tuple[OrderingRule, ...] = ()

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise GenerationSpecError(f"Depth must be non-negative, got {self.depth}")
        if len(self.ordering) != self.depth:
            raise GenerationSpecError(
                f"Depth {self.depth} needs {self.depth} ordering rules, "
                f"got {len(self.ordering)}"
            )

    def lifted(self, rule: OrderingRule) -> "GenerationSpec":
        return GenerationSpec(self.seed, self.depth + 1, (*self.ordering, rule))

    def base(self) -> "GenerationSpec":
        return GenerationSpec(self.seed)


@dataclass(frozen=True)
class TrajectoryMeta:
    generation: GenerationSpec
    times: tuple[complex, ...]
    non_generic: tuple[bool, ...]
    ambiguous: tuple[bool, ...]
    # rule behind ``Trajectory.ordered``, None while unordered
    presentation: OrderingRule | None = None


@dataclass(frozen=True)
class Trajectory:
    """Zero sets ``x(0) .. x(T)`` of one generation.

    ``coefficients[l]`` is the monic polynomial whose zeros are ``states[l]``;
    ``ordered`` is filled in by ``polygen.engine.ordering_rules.order_trajectory``.
    """

    states: tuple[RootSet, ...]
    coefficients: tuple[CoeffVector, ...]
    meta: TrajectoryMeta
    ordered: tuple[OrderedVector, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        count = len(self.states)
        if count == 0:
            raise GenerationSpecError("Trajectory must hold at least one state")
        n = self.states[0].n
        if any(state.n != n for state in self.states):
            raise GenerationSpecError("All trajectory states must share one N")
        lengths = {
            len(self.coefficients),
            len(self.meta.times),
            len(self.meta.non_generic),
            len(self.meta.ambiguous),
        }
        if self.ordered is not None:
            lengths.add(len(self.ordered))
        if lengths != {count}:
            raise GenerationSpecError("Trajectory fields must match the state count")

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[RootSet]:
        return iter(self.states)

    @property
    def n(self) -> int:
        return self.states[0].n

    @property
    def depth(self) -> int:
        return self.meta.generation.depth

    def as_array(self) -> ComplexArray:
        """States as a (T+1, N) array in their stored presentation."""
        return np.array([state.roots for state in self.states], dtype=np.complex128)

    def ordered_array(self) -> ComplexArray:
        if self.ordered is None:
            raise OrderingRuleError("Trajectory has not been ordered")
        return np.array(
            [vector.entries for vector in self.ordered], dtype=np.complex128
        )

    def with_ordering(
        self,
        ordered: tuple[OrderedVector, ...],
        ambiguous: tuple[bool, ...],
        rule: OrderingRule,
    ) -> "Trajectory":
        meta = replace(self.meta, ambiguous=ambiguous, presentation=rule)
        return replace(self, ordered=ordered, meta=meta)

    def with_initial_states(self, initial: tuple[RootSet, ...]) -> "Trajectory":
        """Replace the leading states by the data the run started from."""
        states = initial + self.states[len(initial) :]
        return replace(self, states=states)

    def head(self, count: int) -> "Trajectory":
        """The first ``count`` states with their metadata."""
        if count < 1:
            raise GenerationSpecError(f"Head needs at least one state, got {count}")
        meta = replace(
            self.meta,
            times=self.meta.times[:count],
            non_generic=self.meta.non_generic[:count],
            ambiguous=self.meta.ambiguous[:count],
        )
        ordered = None if self.ordered is None else self.ordered[:count]
        return replace(
            self,
            states=self.states[:count],
            coefficients=self.coefficients[:count],
            meta=meta,
            ordered=ordered,
        )
