from orbitsieve_dt3m.density import (
    DtDimensionFit,
    OmegaDensity,
    degenerate_density,
    dt_dimension_fit,
    lagrangian_degenerate,
    omega_density_exact,
    uniform_symplectic,
)
from orbitsieve_dt3m.heegaard import (
    HeegaardDatum,
    HomologyResult,
    TorsionSizeBound,
    homology_group,
    homology_mod_p,
    torsion_size_bound,
)
from orbitsieve_dt3m.statistics import (
    HomologyRow,
    HomologyStatistics,
    homology_statistics,
    infinite_fraction_rate,
    sifting_rate,
)

__all__ = [
    'DtDimensionFit',
    'HeegaardDatum',
    'HomologyResult',
    'HomologyRow',
    'HomologyStatistics',
    'OmegaDensity',
    'TorsionSizeBound',
    'degenerate_density',
    'dt_dimension_fit',
    'homology_group',
    'homology_mod_p',
    'homology_statistics',
    'infinite_fraction_rate',
    'lagrangian_degenerate',
    'omega_density_exact',
    'sifting_rate',
    'torsion_size_bound',
    'uniform_symplectic',
]
