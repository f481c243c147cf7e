"""Bottleneck distance between unordered zero sets."""

import itertools
from functools import lru_cache

import numpy as np
import numpy.typing as npt
from scipy.optimize import linear_sum_assignment

from polygen.constants.tolerances import PERMUTATION_SCAN_MAX_N
from polygen.constants.types import ComplexArray, FloatArray
from polygen.errors import CardinalityMismatchError
from polygen.primitives.polynomial import RootSet


@lru_cache(maxsize=None)
def _permutations(n: int) -> npt.NDArray[np.intp]:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


def _bottleneck_by_threshold(cost: FloatArray) -> float:
    """Smallest threshold admitting a perfect matching of cheap pairs."""
    candidates = np.unique(cost)
    low, high = 0, candidates.size - 1
    while low < high:
        middle = (low + high) // 2
        blocked = (cost > candidates[middle]).astype(np.float64)
        rows, columns = linear_sum_assignment(blocked)
        if blocked[rows, columns].sum() == 0:
            high = middle
        else:
            low = middle + 1
    return float(candidates[low])


def _bottleneck(cost: FloatArray) -> float:
    n = cost.shape[0]
    if n <= PERMUTATION_SCAN_MAX_N:
        permutations = _permutations(n)
        return float(cost[np.arange(n), permutations].max(axis=1).min())
    return _bottleneck_by_threshold(cost)


def set_distance(a: RootSet, b: RootSet) -> float:
    """Minimum over bijections of the largest matched distance."""
    if a.n != b.n:
        raise CardinalityMismatchError(a.n, b.n)
    cost = np.abs(a.as_array()[:, None] - b.as_array()[None, :])
    return _bottleneck(cost)


def set_distance_curve(states: ComplexArray, lag: int) -> FloatArray:
    """``set_distance(x(l + lag), x(l))`` for every admissible ``l``.

    ``states`` is a (T, N) array of zero sets in any presentation.
    """
    count, n = states.shape
    if lag <= 0 or lag >= count:
        return np.empty(0, dtype=np.float64)
    later = states[lag:]
    earlier = states[: count - lag]
    cost = np.abs(later[:, :, None] - earlier[:, None, :])
    if n > PERMUTATION_SCAN_MAX_N:
        return np.array([_bottleneck(matrix) for matrix in cost])
    permutations = _permutations(n)
    # cost[t, i, perm[k, i]] -> (T, P, N)
    matched = cost[:, np.arange(n)[None, :], permutations]
    return matched.max(axis=2).min(axis=1)


def ordered_distance_curve(vectors: ComplexArray, lag: int) -> FloatArray:
    """Componentwise analogue of ``set_distance_curve`` for ordered vectors."""
    count = vectors.shape[0]
    if lag <= 0 or lag >= count:
        return np.empty(0, dtype=np.float64)
    return np.abs(vectors[lag:] - vectors[: count - lag]).max(axis=1)
