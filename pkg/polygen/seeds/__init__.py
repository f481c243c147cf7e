from polygen.seeds.oracles import quadratic_generation_zero_step, quadratic_zeros
from polygen.seeds.recursions import (
    affine_seed,
    q_affine_wrap,
    second_order_ratios,
    seed_closed_form,
    seed_step,
    seed_time_stamps,
    seed_trajectory,
)

__all__ = [
    "affine_seed",
    "q_affine_wrap",
    "quadratic_generation_zero_step",
    "quadratic_zeros",
    "second_order_ratios",
    "seed_closed_form",
    "seed_step",
    "seed_time_stamps",
    "seed_trajectory",
]
