from orbitsieve_spectral.distribution import (
    EquidistributionResult,
    SpectralRow,
    TripleProductGrowth,
    equidistribution_error,
    exact_walk_distribution,
    spectral_row,
    spectral_table,
    triple_product_growth,
    uniform_rho,
)
from orbitsieve_spectral.graph import (
    CayleyGraph,
    cayley_graph,
    girth_lower_bound,
    graph_diameter,
    markov_apply,
    markov_matrix,
)
from orbitsieve_spectral.spectrum import SpectralReport, mean_zero_spectral_radius

__all__ = [
    'CayleyGraph',
    'EquidistributionResult',
    'SpectralReport',
    'SpectralRow',
    'TripleProductGrowth',
    'cayley_graph',
    'equidistribution_error',
    'exact_walk_distribution',
    'girth_lower_bound',
    'graph_diameter',
    'markov_apply',
    'markov_matrix',
    'mean_zero_spectral_radius',
    'spectral_row',
    'spectral_table',
    'triple_product_growth',
    'uniform_rho',
]
