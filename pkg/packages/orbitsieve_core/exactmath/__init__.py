from orbitsieve_core.exactmath.arithmetic import (
    OmegaValue,
    ensure_squarefree,
    is_squarefree,
    moebius,
    omega,
    prime_factors,
    primes_below,
    squarefree_below,
    squarefree_divisors,
)
from orbitsieve_core.exactmath.factor import DEFAULT_EFFORT, Factorization, FactorizationEffort, factorize
from orbitsieve_core.exactmath.matrix import IntMatrix, rank_mod_p
from orbitsieve_core.exactmath.polynomial import Polynomial
from orbitsieve_core.exactmath.snf import LatticeQuotient, lattice_quotient, smith_normal_form

__all__ = [
    'DEFAULT_EFFORT',
    'Factorization',
    'FactorizationEffort',
    'IntMatrix',
    'LatticeQuotient',
    'OmegaValue',
    'Polynomial',
    'ensure_squarefree',
    'factorize',
    'is_squarefree',
    'lattice_quotient',
    'moebius',
    'omega',
    'prime_factors',
    'primes_below',
    'rank_mod_p',
    'smith_normal_form',
    'squarefree_below',
    'squarefree_divisors',
]
