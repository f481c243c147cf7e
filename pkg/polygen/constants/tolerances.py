"""Default tolerances. Every function that uses one takes it as a keyword."""

# root finding
COLLISION_TOL = 1e-8
ROOT_STEP_TOL = 1e-13
ROOT_MAX_ITER = 500
ROOT_RESIDUAL_TOL = 1e-10
CLUSTER_RADIUS = 1e-5

# seeds
UNIT_MULTIPLIER_TOL = 1e-12
ZERO_COEFFICIENT_TOL = 1e-300

# ordering
BRUTE_FORCE_MAX_N = 6

# period detection
EXACT_PERIOD_TOL = 1e-9
ASYMPTOTIC_PERIOD_TOL = 1e-3
DIVERGENCE_THRESHOLD = 1e12
DIVERGENCE_GROWTH = 1e3
NOISE_FLOOR_ULPS = 1e3
PERMUTATION_SCAN_MAX_N = 5

# parameter taxonomy
UNIT_MODULUS_TOL = 1e-12
ROTATION_DENOMINATOR_BOUND = 10**6
ROTATION_PHASE_TOL = 1e-14

# second-order periodicity conditions
CONDITION_DENOMINATOR_BOUND = 10**3
CONDITION_PHASE_TOL = 1e-9
CONDITION_UNIT_TOL = 1e-9

# verification gate
VERIFY_TOL = 1e-9
