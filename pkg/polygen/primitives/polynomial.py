import cmath
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from polygen.constants.tolerances import COLLISION_TOL
from polygen.constants.types import ComplexArray
from polygen.errors import DegreeError, NonFiniteError, PermutationIndexError


def _as_complex_tuple(values: Iterable[complex], what: str) -> tuple[complex, ...]:
    entries = tuple(complex(value) for value in values)
    for value in entries:
        if not cmath.isfinite(value):
            raise NonFiniteError(f"{what} holds a non-finite value: {value!r}")
    return entries


@dataclass(frozen=True, eq=False)
class RootSet:
    """Unordered multiset of zeros.

    Two root sets are compared with ``polygen.analysis.distance.set_distance``;
    the order of ``roots`` carries no meaning beyond warm-starting.
    """

    roots: tuple[complex, ...]

    def __post_init__(self) -> None:
        roots = _as_complex_tuple(self.roots, "RootSet")
        if not roots:
            raise DegreeError("RootSet must hold at least one root")
        object.__setattr__(self, "roots", roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[complex]:
        return iter(self.roots)

    @property
    def n(self) -> int:
        return len(self.roots)

    def as_array(self) -> ComplexArray:
        return np.array(self.roots, dtype=np.complex128)

    @property
    def min_separation(self) -> float:
        if self.n < 2:
            return math.inf
        values = self.as_array()
        gaps = np.abs(values[:, None] - values[None, :])
        gaps[np.diag_indices(self.n)] = np.inf
        return float(gaps.min())

    def is_non_generic(self, collision_tol: float = COLLISION_TOL) -> bool:
        scale = 1.0 + max(abs(root) for root in self.roots)
        return self.min_separation < collision_tol * scale

    @property
    def non_generic(self) -> bool:
        return self.is_non_generic()


@dataclass(frozen=True)
class OrderedVector:
    entries: tuple[complex, ...]

    def __post_init__(self) -> None:
        entries = _as_complex_tuple(self.entries, type(self).__name__)
        if not entries:
            raise DegreeError(f"{type(self).__name__} must not be empty")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[complex]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> complex:
        return self.entries[index]

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_array(self) -> ComplexArray:
        return np.array(self.entries, dtype=np.complex128)

    @classmethod
    def from_array(cls, values: ComplexArray) -> "OrderedVector":
        return cls(tuple(complex(value) for value in values))


@dataclass(frozen=True)
class CoeffVector(OrderedVector):
    """Coefficients ``(y_1, ..., y_N)`` of ``z**N + sum y_m z**(N-m)``."""

    def polynomial(self) -> "MonicPolynomial":
        return MonicPolynomial(self.entries)

    @classmethod
    def from_array(cls, values: ComplexArray) -> "CoeffVector":
        return cls(tuple(complex(value) for value in values))


@dataclass(frozen=True)
class MonicPolynomial:
    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = _as_complex_tuple(self.coeffs, "MonicPolynomial")
        if len(coeffs) < 2:
            raise DegreeError(
                f"Monic polynomial needs degree N >= 2, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full_coefficients(self) -> ComplexArray:
        """Highest power first, leading 1 included."""
        return np.concatenate(
            ([1 + 0j], np.array(self.coeffs, dtype=np.complex128))
        )


@dataclass(frozen=True)
class PermutationIndex:
    mu: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise PermutationIndexError(f"Arity must be positive, got {self.n}")
        upper = math.factorial(self.n)
        if not 1 <= self.mu <= upper:
            raise PermutationIndexError(
                f"Permutation index mu={self.mu} outside [1, {upper}] for N={self.n}"
            )
