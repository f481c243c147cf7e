from polygen.engine.generation import (
    descend_initial_data,
    generation_zero_step,
    lift_generation,
    solve_from_top_generation,
    solve_generation,
    solve_initial_value,
)
from polygen.engine.key_identity import key_identity_residuals, verify_key_identity
from polygen.engine.ordering_rules import (
    OrderingResult,
    apply_ordering,
    minimum_distance_assignment,
    order_trajectory,
)

__all__ = [
    "OrderingResult",
    "apply_ordering",
    "descend_initial_data",
    "generation_zero_step",
    "key_identity_residuals",
    "lift_generation",
    "minimum_distance_assignment",
    "order_trajectory",
    "solve_from_top_generation",
    "solve_generation",
    "solve_initial_value",
    "verify_key_identity",
]
