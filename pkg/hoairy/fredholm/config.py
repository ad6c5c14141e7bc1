NYSTROM_NODES = 48

# Shared z-grid of the kernel integral: [0, Z_BASE + max(0, -min node)].
Z_BASE = 16.0
Z_NODES = 160
KERNEL_TAIL_TOLERANCE = 1e-12
KERNEL_CACHE_SIZE = 64

# Both contours of the double integral start this far off the real axis.
DOUBLE_CONTOUR_SHIFT = 0.5

# (x_1 + t, inf) is mapped from [0, 1) by s = x_1 + t - n * SUBSTITUTION_SCALE * log(1 - xi);
# Ai_n decays more slowly for larger n.
SUBSTITUTION_SCALE = 1.0
HARD_CUTOFF_LENGTH = 14.0

T_STEP = 0.05
ALPHA_STEP = 0.05
STENCIL_ACCURACY = 4
MAX_JOINT_ORDER = 4

SPECTRUM_TOLERANCE = 1e-8
