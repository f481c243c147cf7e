import numpy as np

from polygen.primitives.polynomial import RootSet

START = RootSet((-1 - 1j, 1 + 0j))


def random_generic_roots(
    rng: np.random.Generator, n: int, min_gap: float = 0.25
) -> RootSet:
    """Roots uniform in the square [-1, 1]^2, redrawn until well separated."""
    while True:
        parts = rng.uniform(-1.0, 1.0, size=(n, 2))
        roots = RootSet(tuple(complex(re, im) for re, im in parts))
        if roots.min_separation >= min_gap:
            return roots
