import math

#: Value of Ω(0).
OMEGA_INFINITY = math.inf

TRIAL_DIVISION_BOUND = 10**6
FACTORIZATION_MAX_BITS = 256
RHO_ITERATION_BUDGET = 200_000
ENUMERATION_CAP = 200_000
SPECTRAL_TOLERANCE = 1e-10
SPECTRAL_MAX_ITERATIONS = 100_000
