from orbitsieve_orbits.balls import CombinatorialBall, NormBall, combinatorial_ball, norm_ball
from orbitsieve_orbits.cache import TableFileCache, TableInMemoryCache
from orbitsieve_orbits.finite import (
    ExceptionalPrimeScan,
    FiniteGroupTable,
    StrongApproximationReport,
    ambient_order,
    discover_exceptional_primes,
    generate_finite_image,
    reduce_mod,
    strong_approx_check,
)
from orbitsieve_orbits.presets import (
    AmbientGroup,
    AmbientKind,
    GroupPreset,
    apollonian,
    builtin_preset_names,
    get_preset,
    lubotzky,
    sl2z,
    sp4z,
    symmetric_generators,
    symplectic,
)
from orbitsieve_orbits.snapshot import read_walk_snapshot, write_walk_snapshot
from orbitsieve_orbits.values import GrowthRate, measure_growth_rate, orbit_value
from orbitsieve_orbits.walks import WalkEnsemble, exact_walk_masses, reduced_walk_indices, sample_walk

__all__ = [
    'AmbientGroup',
    'AmbientKind',
    'CombinatorialBall',
    'ExceptionalPrimeScan',
    'FiniteGroupTable',
    'GroupPreset',
    'GrowthRate',
    'NormBall',
    'StrongApproximationReport',
    'TableFileCache',
    'TableInMemoryCache',
    'WalkEnsemble',
    'ambient_order',
    'apollonian',
    'builtin_preset_names',
    'combinatorial_ball',
    'discover_exceptional_primes',
    'exact_walk_masses',
    'generate_finite_image',
    'get_preset',
    'lubotzky',
    'measure_growth_rate',
    'norm_ball',
    'orbit_value',
    'read_walk_snapshot',
    'reduce_mod',
    'reduced_walk_indices',
    'sample_walk',
    'sl2z',
    'sp4z',
    'strong_approx_check',
    'symmetric_generators',
    'symplectic',
    'write_walk_snapshot',
]
