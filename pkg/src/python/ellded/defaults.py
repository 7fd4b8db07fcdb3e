# -*- coding: utf-8 -*-

ELLDED_SERIES_TOL = 1e-12
ELLDED_MAX_TERMS = 10 ** 6
ELLDED_MIN_IM_TAU = 0.05
ELLDED_SLOW_IM_TAU = 0.11
ELLDED_SLOW_TERMS_FACTOR = 10
ELLDED_LATTICE_GAP = 1e-12
ELLDED_NONDEGENERACY_GAP = 1e-9

ELLDED_RANK_THRESHOLD = 1e-8
ELLDED_TAU_REAL_RANGE = (-0.4, 0.4)
ELLDED_TAU_IMAG_RANGE = (0.8, 1.5)
ELLDED_DEFAULT_SEED = 7
ELLDED_DEFAULT_TAU = '0+1i'

ELLDED_TAYLOR_STEP = 1e-2
ELLDED_TAYLOR_POINTS = 5
ELLDED_FD_STEP = 1e-5

ELLDED_GENERATING_POINTS = (0.003, 0.007, 0.011)
ELLDED_BERNOULLI_SUM_POINTS = (0.004, 0.009)
ELLDED_SHIFT_S = 0.013
ELLDED_SHIFT_T = 0.007
ELLDED_LIMIT_HEIGHTS = (10.0, 15.0, 20.0)

ELLDED_DEFAULT_FORMAT = 'json'
ELLDED_MAX_TOL = 1e-3

# Per-family check tolerances; ELLDED_CHECK_TOL or --tol override them.
ELLDED_CHECK_TOLERANCES = {
    'apostol-reciprocity': 0.0,
    'axioms': 1e-9,
    'reciprocity': 1e-8,
    'generating': 1e-8,
    'bernoulli-sums': 1e-8,
    'rademacher': 1e-7,
    'coefficients': 1e-8,
    'three-term': 1e-8,
    'decomposition': 1e-7,
    'basis-rank': 1e-8,
    'limit': 1e-6,
}
ELLDED_CHECK_TOL = None

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4
