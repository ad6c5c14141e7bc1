# Start of the backward integration per n; raised in unit steps while a seed
# is still above SEED_THRESHOLD.
T_MAX = {1: 8.0, 2: 6.0}
T_MAX_FALLBACK = 6.0
T_MAX_LIMIT = 30.0
SEED_THRESHOLD = 1e-6
# Without a fixed t_max, u must move by less than this when t_max is raised by 1.
T_MAX_AGREEMENT = 1e-7

T_MIN = 0.0
REPORT_STEP = 0.01

RTOL = 1e-11
ATOL = 1e-16
# Per component the absolute tolerance never exceeds RTOL times the seed size.
ATOL_FLOOR = 1e-300
# The trust window compares against a run with tolerances scaled by this.
TIGHTENING = 0.1
TRUST_AGREEMENT = 1e-7
# Relative to max |u_j| over the grid.
REALITY_TOLERANCE = 1e-6

# Asymptotic tail of the Tracy-Widom integral beyond t_max.
TAIL_LENGTH = 12.0
TAIL_NODES = 96
TAIL_TOLERANCE = 1e-6

ROUTE_TOLERANCE = 1e-4

# Hastings-McLeod boundary value oracle.
BVP_T_LEFT = -8.0
BVP_T_RIGHT = 8.0
BVP_TOLERANCE = 1e-10
BVP_MAX_NODES = 200000
