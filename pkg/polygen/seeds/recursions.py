import logging
from collections.abc import Sequence

import numpy as np

from polygen.constants.types import ComplexArray, SolveMode
from polygen.errors import (
    CardinalityMismatchError,
    CoefficientOverflowError,
    SeedSpecError,
)
from polygen.primitives.polynomial import CoeffVector
from polygen.primitives.seeds import AffineParams, SecondOrderParams, SeedSpec
from polygen.protocols.seed_protocols import SeedRecursion

logger = logging.getLogger(__name__)


def _arrays(spec: SeedSpec, vectors: Sequence[CoeffVector]) -> list[ComplexArray]:
    if len(vectors) != spec.order:
        raise SeedSpecError(
            f"Seed of order {spec.order} needs {spec.order} vectors, "
            f"got {len(vectors)}"
        )
    arrays = []
    for vector in vectors:
        if vector.n != spec.arity:
            raise CardinalityMismatchError(spec.arity, vector.n)
        arrays.append(vector.as_array())
    return arrays


def recursion_of(spec: SeedSpec) -> SeedRecursion:
    return spec.params


def _checked(spec: SeedSpec, values: ComplexArray, ell: int) -> CoeffVector:
    if values.shape != (spec.arity,):
        raise SeedSpecError(
            f"Seed parameters produced {values.shape[0]} coefficients at step {ell}, "
            f"expected {spec.arity}"
        )
    if not np.all(np.isfinite(values)):
        raise CoefficientOverflowError(f"Seed coefficients overflowed at step {ell}")
    return CoeffVector.from_array(values)


def seed_step(spec: SeedSpec, history: Sequence[CoeffVector], ell: int) -> CoeffVector:
    """Advance the seed: ``history`` holds ``y(ell) .. y(ell+p-1)``."""
    arrays = _arrays(spec, history)
    with np.errstate(over="ignore", invalid="ignore"):
        values = recursion_of(spec).step(arrays, ell)
    return _checked(spec, values, ell + spec.order)


def seed_closed_form(
    spec: SeedSpec, initial: Sequence[CoeffVector], ell: int
) -> CoeffVector:
    if ell < 0:
        raise SeedSpecError(f"Time index must be non-negative, got {ell}")
    arrays = _arrays(spec, initial)
    with np.errstate(over="ignore", invalid="ignore"):
        values = recursion_of(spec).closed_form(arrays, ell)
    return _checked(spec, values, ell)


def seed_trajectory(
    spec: SeedSpec,
    initial: Sequence[CoeffVector],
    steps: int,
    mode: SolveMode = "closed-form",
) -> list[CoeffVector]:
    """``y(0) .. y(steps)``, the given initial vectors included as supplied."""
    logger.debug("Seed trajectory kind=%s mode=%s steps=%d", spec.kind, mode, steps)
    states = list(initial[: steps + 1])
    if mode == "closed-form":
        _arrays(spec, initial)
        states.extend(
            seed_closed_form(spec, initial, ell)
            for ell in range(spec.order, steps + 1)
        )
        return states
    for ell in range(spec.order, steps + 1):
        states.append(seed_step(spec, states[-spec.order :], ell - spec.order))
    return states


def second_order_ratios(
    spec: SeedSpec, initial: Sequence[CoeffVector], count: int
) -> ComplexArray:
    if not isinstance(spec.params, SecondOrderParams):
        raise SeedSpecError(f"Seed kind {spec.kind!r} has no ratio substitution")
    return spec.params.ratios(_arrays(spec, initial), count)


def q_affine_wrap(params: AffineParams, q: complex) -> SeedSpec:
    """Affine seed read on the q-discrete time axis ``t = q**ell``."""
    return SeedSpec(kind="q-affine", params=params, arity=len(params.a), q=complex(q))


def seed_time_stamps(spec: SeedSpec, count: int) -> tuple[complex, ...]:
    if spec.kind == "q-affine" and spec.q is not None:
        q = complex(spec.q)
        return tuple(q**ell for ell in range(count))
    return tuple(complex(ell) for ell in range(count))


def affine_seed(a: Sequence[complex], b: Sequence[complex]) -> SeedSpec:
    params = AffineParams(tuple(a), tuple(b))
    return SeedSpec(kind="affine", params=params, arity=len(params.a))
