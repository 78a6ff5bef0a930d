import math

# default truncation degree of every Series
DEFAULT_ORDER = 64
MIN_ORDER = 8

# largest radius a truncated series is evaluated at
R_MAX = 1.0 - 2.0**-20

DEFAULT_QUAD_POINTS = 4096
MIN_CIRCLE_POINTS = 8
MIN_MEANS_POINTS = 256
MIN_ARC_POINTS = 64
# hard cap on the escalated grid near r = 1
MAX_QUAD_POINTS = 2**17

DEFAULT_SCAN_RADII = (0.5, 0.9, 0.99, 0.999)
DEFAULT_SCAN_GRID = 32

SCHWARZ_CHECK_RADIUS = 0.999
SCHWARZ_MARGIN = 1e-6
SCHWARZ_CHECK_POINTS = 512

POSITIVITY_TOL = 1e-9
UNIT_TOL = 1e-12
MEASURE_TOL = 1e-12
BOUND_SLACK = 1e-9
DOMINATION_SLACK = 1e-10
COUNTEREXAMPLE_TOL = 1e-6
# excess over a proven bound that the command line reports as a bug
INVARIANT_TOL = 1e-6
MONOTONE_SLACK = 1e-9

BOUNDED_RESIDUAL = 0.05
HONEST_TAIL = 1e-2
POWER_EXPONENTS = tuple(round(0.1 * k, 1) for k in range(1, 31))

SWEEP_MAX_ATOMS = 8
SWEEP_MAX_DEGREE = 16

TWO_PI = 2.0 * math.pi
