"""
Centralized defaults for spectral, combinatorial and search routines.

Import these constants instead of hardcoding values in individual files.
Every value can be overridden through core.config.settings or a CLI flag.
"""

# =============================================================================
# Perron value (power iteration)
# =============================================================================
PERRON_TOL = 1e-12               # Max-norm change between normalized iterates
PERRON_MAX_ITER = 1_000_000      # Iteration cap before ConvergenceError

# =============================================================================
# Exhaustive search guards
# =============================================================================
SUBSET_CAP = 2 ** 20             # Distinct subsets explored by the zero test
ENUMERATION_CAP = 10_000_000     # q^n cap for noise enumeration
CODEBOOK_CAP = 4096              # q^n cap for the confusability graph
ORACLE_MAX_LEN = 8               # Difference length checked by the universality oracle

# =============================================================================
# Feedback capacity minimization
# =============================================================================
GRID_POINTS = 99                 # Coarse grid points per free parameter
GRID_LOW = 0.01
GRID_HIGH = 0.99
REFINE_TOL = 1e-6                # Parameter tolerance of the local refinement
REFINE_MAX_SWEEPS = 50           # Coordinate sweeps before giving up on refinement
MAX_FREE_PARAMS = 4
GRID_EVAL_CAP = 1_000_000        # grid_points ** free parameters
STOCHASTIC_TOL = 1e-12           # Row sums of transition probabilities

# =============================================================================
# Feedback codec
# =============================================================================
SCHEME_BLOCKLENGTH_CAP = 6       # Longest base blocklength tried by build_scheme

# =============================================================================
# CLI exit codes and report schema
# =============================================================================
EXIT_OK = 0
EXIT_FAILURE = 1                 # Oracle disagreement or other domain error
EXIT_INVALID = 2                 # Syntax or validation failure
EXIT_RESOURCE = 3                # Guard exceeded or power iteration diverged
EXIT_IO = 4
EXIT_CAPACITY_ZERO = 10          # zerotest verdict CapacityZero

REPORT_SCHEMA = "zerocap.report/1"
