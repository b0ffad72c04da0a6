from orbitsieve_sieve.almost_prime import (
    AlmostPrimeMeasure,
    OmegaObservation,
    almost_prime_measure,
    measure_observations,
    observe_ensemble,
    observe_omega,
    predicted_saturation_r,
    saturation_table,
)
from orbitsieve_sieve.baselines import (
    AlmostPrimeCount,
    HardyRamanujanCheck,
    PrimeCountCheck,
    almost_prime_counts,
    hardy_ramanujan_variance,
    omega_table,
    prime_count_check,
)
from orbitsieve_sieve.density import (
    ClassicalRemainder,
    DimensionFit,
    LocalDensity,
    classical_remainder,
    dimension_estimate,
    fitted_rate,
    local_density,
    orbit_zero_predicate,
    poly_root_count,
    polynomial_densities,
)
from orbitsieve_sieve.ledger import LevelLedger, Remainder, level_ledger
from orbitsieve_sieve.mass import ConcentrationResult, LargeSieveMass, large_sieve_mass, prime_divisor_concentration
from orbitsieve_sieve.sequence import SieveItem, SieveSequence
from orbitsieve_sieve.sifting import (
    SiftedBracket,
    SiftResult,
    ZeroSetBound,
    congruence_sum,
    direct_sift,
    legendre_sift,
    sifted_bracket,
    zero_set_bound,
)

__all__ = [
    'AlmostPrimeCount',
    'AlmostPrimeMeasure',
    'ClassicalRemainder',
    'ConcentrationResult',
    'DimensionFit',
    'HardyRamanujanCheck',
    'LargeSieveMass',
    'LevelLedger',
    'LocalDensity',
    'OmegaObservation',
    'PrimeCountCheck',
    'Remainder',
    'SieveItem',
    'SieveSequence',
    'SiftResult',
    'SiftedBracket',
    'ZeroSetBound',
    'almost_prime_counts',
    'almost_prime_measure',
    'classical_remainder',
    'congruence_sum',
    'dimension_estimate',
    'direct_sift',
    'fitted_rate',
    'hardy_ramanujan_variance',
    'large_sieve_mass',
    'legendre_sift',
    'level_ledger',
    'local_density',
    'measure_observations',
    'observe_ensemble',
    'observe_omega',
    'omega_table',
    'orbit_zero_predicate',
    'poly_root_count',
    'polynomial_densities',
    'predicted_saturation_r',
    'prime_count_check',
    'prime_divisor_concentration',
    'saturation_table',
    'sifted_bracket',
    'zero_set_bound',
]
