NODES_PER_RAY = 200
RADIUS_BASE = 6.0
RADIUS_SCALE = 2.0

# Above this argument the integrand's cancellation swamps Ai_n.
MAX_ARGUMENT = 12.0

REALITY_TOLERANCE = 1e-12
TAIL_TOLERANCE = 1e-13
# Bound on the rounding error of the quadrature sum, sum |w f| * eps.
CANCELLATION_TOLERANCE = 1e-10

# Rows of the argument grid evaluated per numpy batch.
BATCH_SIZE = 512

# Saddle point route for positive arguments: Gauss-Legendre nodes per half
# line, the window keeps the integrand within exp(-SADDLE_DEPTH) of its peak.
SADDLE_FROM = 2.0
SADDLE_NODES = 300
SADDLE_DEPTH = 40.0
SADDLE_REACH = 8.0
SADDLE_SCAN = 4001
SADDLE_PAD = 0.25
