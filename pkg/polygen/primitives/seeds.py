"""Parameter blocks of the solvable seed recursions.

Each block implements ``polygen.protocols.seed_protocols.SeedRecursion`` on
raw complex arrays; ``polygen.seeds.recursions`` wraps them into the public
coefficient-vector operations.
"""

import cmath
import math
import threading
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from polygen.constants.tolerances import UNIT_MULTIPLIER_TOL, ZERO_COEFFICIENT_TOL
from polygen.constants.types import ComplexArray, SeedKind
from polygen.errors import SeedSpecError, ZeroCoefficientError
from polygen.helpers.helpers import rotation_multiplier

Schedule = Callable[[int], Sequence[complex]]


@dataclass(frozen=True)
class RationalRotation:
    q: int
    p: int

    def __post_init__(self) -> None:
        if self.p <= 0:
            raise SeedSpecError(f"Rotation denominator must be positive, got {self.p}")
        if math.gcd(abs(self.q), self.p) != 1:
            raise SeedSpecError(
                f"Rotation {self.q}/{self.p} is not in lowest terms"
            )

    @property
    def multiplier(self) -> complex:
        return rotation_multiplier(self.q, self.p)


@dataclass(frozen=True)
class ConstantSchedule:
    values: tuple[complex, ...]

    def __call__(self, ell: int) -> tuple[complex, ...]:
        return self.values


@dataclass(frozen=True)
class CyclicSchedule:
    """Row ``ell mod len(rows)`` of a table of N-vectors."""

    rows: tuple[tuple[complex, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise SeedSpecError("Cyclic schedule needs at least one row")
        if len({len(row) for row in self.rows}) != 1:
            raise SeedSpecError("Cyclic schedule rows must share one length")

    def __call__(self, ell: int) -> tuple[complex, ...]:
        return self.rows[ell % len(self.rows)]


def geometric_factor(a: ComplexArray, ell: int) -> ComplexArray:
    """``(a**ell - 1) / (a - 1)``, replaced by ``ell`` where ``a`` is 1."""
    near_one = np.abs(a - 1) < UNIT_MULTIPLIER_TOL
    safe = np.where(near_one, 2.0 + 0j, a)
    return np.where(near_one, complex(ell), (safe**ell - 1) / (safe - 1))


def linear_closed_form(
    y0: ComplexArray, gs: ComplexArray, hs: ComplexArray
) -> ComplexArray:
    """Solve ``y(j+1) = g(j) y(j) + h(j)`` for ``y(len(gs))``.

    ``gs`` and ``hs`` hold rows ``j = 0 .. ell-1``. Uses suffix products, so
    the cost is linear in ``ell``.
    """
    ell = gs.shape[0]
    if ell == 0:
        return y0.copy()
    # suffix[k] = prod_{j=k}^{ell-1} g(j), suffix[ell] = 1
    suffix = np.ones((ell + 1, y0.shape[0]), dtype=np.complex128)
    suffix[:-1] = np.cumprod(gs[::-1], axis=0)[::-1]
    return suffix[0] * y0 + np.sum(suffix[1:] * hs, axis=0)


def _check_nonzero(values: ComplexArray, ell: int) -> None:
    small = np.abs(values) < ZERO_COEFFICIENT_TOL
    if small.any():
        index = int(np.argmax(small)) + 1
        raise ZeroCoefficientError(
            f"Coefficient y_{index}({ell}) vanished; the second-order recursion "
            "divides by it"
        )


@dataclass(frozen=True)
class AffineParams:
    a: tuple[complex, ...]
    b: tuple[complex, ...]
    # exact (q, p) per component, None where the multiplier is not a rotation
    rotations: tuple[RationalRotation | None, ...] | None = None

    def __post_init__(self) -> None:
        a = tuple(complex(value) for value in self.a)
        b = tuple(complex(value) for value in self.b)
        if not a or len(a) != len(b):
            raise SeedSpecError(
                f"Affine seed needs equally long a and b, got {len(a)} and {len(b)}"
            )
        if not all(cmath.isfinite(value) for value in a + b):
            raise SeedSpecError("Affine seed parameters must be finite")
        if self.rotations is not None and len(self.rotations) != len(a):
            raise SeedSpecError("One rotation entry per component is required")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_multipliers(
        cls,
        multipliers: Sequence[tuple[float, int, int]],
        b: Sequence[complex],
    ) -> "AffineParams":
        rotations = tuple(RationalRotation(q, p) for _, q, p in multipliers)
        a = tuple(
            rotation_multiplier(q, p, modulus) for modulus, q, p in multipliers
        )
        return cls(a, tuple(b), rotations)

    @property
    def order(self) -> int:
        return 1

    @property
    def arity(self) -> int | None:
        return len(self.a)

    def step(self, history: Sequence[ComplexArray], ell: int) -> ComplexArray:
        a = np.array(self.a, dtype=np.complex128)
        b = np.array(self.b, dtype=np.complex128)
        return a * history[-1] + b

    def closed_form(self, initial: Sequence[ComplexArray], ell: int) -> ComplexArray:
        a = np.array(self.a, dtype=np.complex128)
        b = np.array(self.b, dtype=np.complex128)
        return a**ell * initial[0] + geometric_factor(a, ell) * b


@dataclass(frozen=True)
class NonautonomousParams:
    g: Schedule
    h: Schedule
    _cache: dict[int, tuple[ComplexArray, ComplexArray]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )

    @property
    def order(self) -> int:
        return 1

    @property
    def arity(self) -> int | None:
        return None

    def coefficients_at(self, ell: int) -> tuple[ComplexArray, ComplexArray]:
        with self._lock:
            cached = self._cache.get(ell)
            if cached is None:
                g = np.array(self.g(ell), dtype=np.complex128)
                h = np.array(self.h(ell), dtype=np.complex128)
                if g.shape != h.shape:
                    raise SeedSpecError(
                        f"g({ell}) and h({ell}) have different lengths"
                    )
                cached = (g, h)
                self._cache[ell] = cached
        return cached

    def schedule(self, ell: int) -> tuple[ComplexArray, ComplexArray]:
        """Rows ``j = 0 .. ell-1`` of g and h stacked into arrays."""
        rows = [self.coefficients_at(j) for j in range(ell)]
        if not rows:
            empty = np.empty((0, 0), dtype=np.complex128)
            return empty, empty
        return np.stack([g for g, _ in rows]), np.stack([h for _, h in rows])

    def step(self, history: Sequence[ComplexArray], ell: int) -> ComplexArray:
        g, h = self.coefficients_at(ell)
        return g * history[-1] + h

    def closed_form(self, initial: Sequence[ComplexArray], ell: int) -> ComplexArray:
        gs, hs = self.schedule(ell)
        return linear_closed_form(initial[0], gs, hs)


@dataclass(frozen=True)
class SecondOrderParams:
    """``y(l+2) = a(l) y(l+1)**2 / y(l) + b(l) y(l+1)``, componentwise."""

    a: Schedule
    b: Schedule
    autonomous: bool = False
    rotations: tuple[RationalRotation | None, ...] | None = None
    _cache: dict[int, tuple[ComplexArray, ComplexArray]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.autonomous:
            same_a = tuple(self.a(0)) == tuple(self.a(1))
            same_b = tuple(self.b(0)) == tuple(self.b(1))
            if not (same_a and same_b):
                raise SeedSpecError(
                    "Autonomous second-order seed needs constant a and b"
                )

    @classmethod
    def constant(
        cls,
        a: Sequence[complex],
        b: Sequence[complex],
        rotations: tuple[RationalRotation | None, ...] | None = None,
    ) -> "SecondOrderParams":
        return cls(
            ConstantSchedule(tuple(complex(v) for v in a)),
            ConstantSchedule(tuple(complex(v) for v in b)),
            autonomous=True,
            rotations=rotations,
        )

    @classmethod
    def from_multipliers(
        cls,
        multipliers: Sequence[tuple[float, int, int]],
        b: Sequence[complex],
    ) -> "SecondOrderParams":
        rotations = tuple(RationalRotation(q, p) for _, q, p in multipliers)
        a = tuple(
            rotation_multiplier(q, p, modulus) for modulus, q, p in multipliers
        )
        return cls.constant(a, b, rotations)

    @property
    def order(self) -> int:
        return 2

    @property
    def arity(self) -> int | None:
        return len(self.a(0)) if self.autonomous else None

    def coefficients_at(self, ell: int) -> tuple[ComplexArray, ComplexArray]:
        with self._lock:
            cached = self._cache.get(ell)
            if cached is None:
                cached = (
                    np.array(self.a(ell), dtype=np.complex128),
                    np.array(self.b(ell), dtype=np.complex128),
                )
                self._cache[ell] = cached
        return cached

    def step(self, history: Sequence[ComplexArray], ell: int) -> ComplexArray:
        y0, y1 = history[-2], history[-1]
        _check_nonzero(y0, ell)
        a, b = self.coefficients_at(ell)
        return a * y1 * y1 / y0 + b * y1

    def ratios(self, initial: Sequence[ComplexArray], count: int) -> ComplexArray:
        """``u(j) = y(j+1) / y(j)`` for ``j = 0 .. count-1``."""
        y0, y1 = initial[0], initial[1]
        _check_nonzero(y0, 0)
        u0 = y1 / y0
        if count == 0:
            return np.empty((0, y0.shape[0]), dtype=np.complex128)
        if self.autonomous:
            a, b = self.coefficients_at(0)
            powers = a[None, :] ** np.arange(count)[:, None]
            geometric = np.stack([geometric_factor(a, j) for j in range(count)])
            return powers * u0 + geometric * b
        u = np.empty((count, y0.shape[0]), dtype=np.complex128)
        u[0] = u0
        for j in range(count - 1):
            a, b = self.coefficients_at(j)
            u[j + 1] = a * u[j] + b
        return u

    def closed_form(self, initial: Sequence[ComplexArray], ell: int) -> ComplexArray:
        if ell < 2:
            return initial[ell].copy()
        u = self.ratios(initial, ell)
        return initial[0] * np.prod(u, axis=0)


SeedParams = AffineParams | NonautonomousParams | SecondOrderParams

_PARAMS_BY_KIND: dict[str, type] = {
    "affine": AffineParams,
    "q-affine": AffineParams,
    "nonautonomous-linear": NonautonomousParams,
    "second-order-multiplicative": SecondOrderParams,
}


@dataclass(frozen=True)
class SeedSpec:
    kind: SeedKind
    params: SeedParams
    arity: int
    # q-discrete time base, only for the q-affine kind
    q: complex | None = None

    def __post_init__(self) -> None:
        expected = _PARAMS_BY_KIND.get(self.kind)
        if expected is None:
            raise SeedSpecError(f"Unknown seed kind {self.kind!r}")
        if not isinstance(self.params, expected):
            raise SeedSpecError(
                f"Seed kind {self.kind!r} needs {expected.__name__}, "
                f"got {type(self.params).__name__}"
            )
        if self.arity < 1:
            raise SeedSpecError(f"Seed arity must be positive, got {self.arity}")
        known = self.params.arity
        if known is not None and known != self.arity:
            raise SeedSpecError(
                f"Seed arity {self.arity} disagrees with parameters of length {known}"
            )
        if self.kind == "q-affine":
            if self.q is None or abs(complex(self.q) - 1) < UNIT_MULTIPLIER_TOL:
                raise SeedSpecError("q-discrete seeds need q != 1")
        elif self.q is not None:
            raise SeedSpecError(f"Seed kind {self.kind!r} takes no q")

    @property
    def order(self) -> int:
        return self.params.order
