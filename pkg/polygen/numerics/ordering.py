import math

from polygen.errors import CardinalityMismatchError, PermutationIndexError
from polygen.primitives.polynomial import OrderedVector, PermutationIndex, RootSet


def _lexicographic_positions(values: tuple[complex, ...]) -> list[int]:
    return sorted(
        range(len(values)), key=lambda k: (values[k].real, values[k].imag, k)
    )


def lexicographic_order(roots: RootSet) -> OrderedVector:
    """Sort by real part, then imaginary part, then presentation index."""
    positions = _lexicographic_positions(roots.roots)
    return OrderedVector(tuple(roots.roots[k] for k in positions))


def permutation_by_index(idx: PermutationIndex) -> tuple[int, ...]:
    """The ``mu``-th permutation of ``0 .. N-1`` in lexicographic enumeration.

    Entry ``j`` names the lexicographic position placed at slot ``j``, so for
    N=3 the indices 1..6 give abc, acb, bac, bca, cab, cba.
    """
    remaining = list(range(idx.n))
    rank = idx.mu - 1
    permutation = []
    for size in range(idx.n, 0, -1):
        block = math.factorial(size - 1)
        position, rank = divmod(rank, block)
        permutation.append(remaining.pop(position))
    return tuple(permutation)


def index_of_permutation(permutation: tuple[int, ...]) -> PermutationIndex:
    n = len(permutation)
    if sorted(permutation) != list(range(n)):
        raise PermutationIndexError(f"{permutation} is not a permutation of 0..{n - 1}")
    remaining = list(range(n))
    rank = 0
    for size, value in zip(range(n, 0, -1), permutation, strict=True):
        position = remaining.index(value)
        rank += position * math.factorial(size - 1)
        remaining.pop(position)
    return PermutationIndex(rank + 1, n)


def order_by_mu(roots: RootSet, idx: PermutationIndex) -> OrderedVector:
    if idx.n != roots.n:
        raise CardinalityMismatchError(roots.n, idx.n)
    lexicographic = lexicographic_order(roots)
    return OrderedVector(
        tuple(lexicographic.entries[k] for k in permutation_by_index(idx))
    )


def permutation_index_of(vector: OrderedVector) -> PermutationIndex:
    """The index ``mu`` for which ``order_by_mu`` reproduces ``vector``."""
    positions = _lexicographic_positions(vector.entries)
    # positions[k] is the slot holding the k-th smallest entry
    permutation = [0] * vector.n
    for rank, slot in enumerate(positions):
        permutation[slot] = rank
    return index_of_permutation(tuple(permutation))
