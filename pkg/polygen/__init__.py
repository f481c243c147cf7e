"""polygen - solvable discrete-time dynamics of polynomial zeros.

A seed recursion with a closed-form solution drives the coefficients of a
monic polynomial; the library follows the zeros of that polynomial
(generation zero), lifts ordered zeros into the coefficients of the next
generation, and classifies the resulting trajectories as periodic,
asymptotically periodic, convergent or divergent.
"""

from polygen.numerics import (  # noqa: I001
    coefficients_from_zeros,
    zeros_from_coefficients,
)
from polygen.primitives.polynomial import CoeffVector, RootSet
from polygen.primitives.trajectory import GenerationSpec, OrderingRule, Trajectory
from polygen.engine import lift_generation, solve_generation, solve_initial_value
from polygen.analysis import classify_parameters, detect_period, set_distance

__version__ = "0.1.0"

__all__ = [
    "CoeffVector",
    "GenerationSpec",
    "OrderingRule",
    "RootSet",
    "Trajectory",
    "classify_parameters",
    "coefficients_from_zeros",
    "detect_period",
    "lift_generation",
    "set_distance",
    "solve_generation",
    "solve_initial_value",
    "zeros_from_coefficients",
]
