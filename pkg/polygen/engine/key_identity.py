import numpy as np

from polygen.constants.types import ComplexArray
from polygen.errors import CardinalityMismatchError
from polygen.primitives.polynomial import CoeffVector, RootSet
from polygen.primitives.trajectory import Trajectory


def _powers(x: ComplexArray, n: int) -> ComplexArray:
    """Rows ``x_k**(N-m)`` for ``m = 1 .. N``."""
    return x[:, None] ** np.arange(n - 1, -1, -1)[None, :]


def verify_key_identity(
    x_now: RootSet, x_next: RootSet, y_now: CoeffVector, y_next: CoeffVector
) -> float:
    """Largest residual of the key identity and its alternative form.

    For zeros ``x`` of ``y`` and ``x'`` of ``y'``:
        prod_j (x'_n - x_j) + sum_m (y'_m - y_m) x'_n**(N-m) = 0
        prod_j (x_n - x'_j) - sum_m (y'_m - y_m) x_n**(N-m) = 0
    """
    n = x_now.n
    for other in (x_next.n, y_now.n, y_next.n):
        if other != n:
            raise CardinalityMismatchError(n, other)
    now = x_now.as_array()
    later = x_next.as_array()
    increment = y_next.as_array() - y_now.as_array()

    forward = np.prod(later[:, None] - now[None, :], axis=1)
    forward = forward + _powers(later, n) @ increment
    backward = np.prod(now[:, None] - later[None, :], axis=1)
    backward = backward - _powers(now, n) @ increment
    return float(max(np.max(np.abs(forward)), np.max(np.abs(backward))))


def key_identity_residuals(trajectory: Trajectory) -> list[float]:
    """Residual for every consecutive pair of states."""
    states = trajectory.states
    coefficients = trajectory.coefficients
    return [
        verify_key_identity(
            states[k], states[k + 1], coefficients[k], coefficients[k + 1]
        )
        for k in range(len(states) - 1)
    ]
