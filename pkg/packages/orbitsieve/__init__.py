from orbitsieve_apollonian import (
    DescartesQuadruple,
    Packing,
    curvature_counts,
    descartes_form,
    enumerate_packing,
    reduce_to_root,
    reflect,
    tangent_pairs,
)
from orbitsieve_core import BigInt
from orbitsieve_core.exactmath import (
    FactorizationEffort,
    IntMatrix,
    Polynomial,
    factorize,
    lattice_quotient,
    moebius,
    omega,
    smith_normal_form,
)
from orbitsieve_dt3m import (
    HeegaardDatum,
    HomologyResult,
    homology_group,
    homology_mod_p,
    homology_statistics,
    omega_density_exact,
)
from orbitsieve_orbits import (
    FiniteGroupTable,
    GroupPreset,
    WalkEnsemble,
    generate_finite_image,
    get_preset,
    reduce_mod,
    sample_walk,
    strong_approx_check,
)
from orbitsieve_sieve import (
    LocalDensity,
    SieveSequence,
    almost_prime_measure,
    congruence_sum,
    dimension_estimate,
    large_sieve_mass,
    legendre_sift,
    level_ledger,
    local_density,
    poly_root_count,
    prime_divisor_concentration,
)
from orbitsieve_spectral import (
    CayleyGraph,
    SpectralReport,
    cayley_graph,
    equidistribution_error,
    mean_zero_spectral_radius,
    triple_product_growth,
)

__all__ = [
    # exact arithmetic
    'BigInt',
    'FactorizationEffort',
    'IntMatrix',
    'Polynomial',
    'factorize',
    'lattice_quotient',
    'moebius',
    'omega',
    'smith_normal_form',
    # apollonian packings
    'DescartesQuadruple',
    'Packing',
    'curvature_counts',
    'descartes_form',
    'enumerate_packing',
    'reduce_to_root',
    'reflect',
    'tangent_pairs',
    # orbits
    'FiniteGroupTable',
    'GroupPreset',
    'WalkEnsemble',
    'generate_finite_image',
    'get_preset',
    'reduce_mod',
    'sample_walk',
    'strong_approx_check',
    # spectral
    'CayleyGraph',
    'SpectralReport',
    'cayley_graph',
    'equidistribution_error',
    'mean_zero_spectral_radius',
    'triple_product_growth',
    # sieve
    'LocalDensity',
    'SieveSequence',
    'almost_prime_measure',
    'congruence_sum',
    'dimension_estimate',
    'large_sieve_mass',
    'legendre_sift',
    'level_ledger',
    'local_density',
    'poly_root_count',
    'prime_divisor_concentration',
    # dt3m
    'HeegaardDatum',
    'HomologyResult',
    'homology_group',
    'homology_mod_p',
    'homology_statistics',
    'omega_density_exact',
]
