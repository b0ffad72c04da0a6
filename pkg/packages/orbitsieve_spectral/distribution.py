import logging
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from orbitsieve_core.consts import ENUMERATION_CAP, SPECTRAL_MAX_ITERATIONS, SPECTRAL_TOLERANCE
from orbitsieve_core.exactmath import IntMatrix
from orbitsieve_orbits.finite import FiniteGroupTable, generate_finite_image

from orbitsieve_spectral.exceptions import NotGeneratingError
from orbitsieve_spectral.graph import CayleyGraph, cayley_graph, girth_lower_bound, graph_diameter
from orbitsieve_spectral.spectrum import SpectralReport, mean_zero_spectral_radius

if t.TYPE_CHECKING:
    from orbitsieve_orbits.cache.base_cache import TableBaseCache
    from orbitsieve_orbits.presets import GroupPreset

_logger = logging.getLogger(__name__)

_BOUND_SLACK = 1e-9


def exact_walk_distribution(graph: CayleyGraph, steps: int) -> np.ndarray:
    """Weighted word counts of the ``steps``-th walk position, as exact integers.

    Entry ``x`` is ``Σ w_{s_1}···w_{s_k}`` over the words ``s_1 … s_k`` whose product is element ``x``; the
    counts sum to ``W^k``. Each step is a pushforward through the permutation columns of the action table.
    """
    counts = np.zeros(graph.size, dtype=object)
    counts[0] = 1
    for _ in range(steps):
        following = np.zeros(graph.size, dtype=object)
        for s in range(graph.arity):
            following[graph.action[:, s]] += counts * int(graph.table.weights[s])
        counts = following
    return counts


@dataclass(frozen=True)
class EquidistributionResult:
    """Exact maximal deviation of the walk law modulo ``d`` from uniform, against ``sqrt(|Λ_d|)·ρ₀^k``."""

    modulus: int
    steps: int
    size: int
    max_error: Fraction
    rho0: float
    bound: float

    @property
    def holds(self) -> bool:
        return float(self.max_error) <= self.bound + _BOUND_SLACK


def equidistribution_error(
    preset: 'GroupPreset',
    d: int,
    steps: int,
    table: t.Optional[FiniteGroupTable] = None,
    report: t.Optional[SpectralReport] = None,
    cap: int = ENUMERATION_CAP,
) -> EquidistributionResult:
    """Measure ``max_α |μ_k(α) − 1/|Λ_d||`` exactly and evaluate the spectral bound.

    Args:
        preset: Group preset.
        d: Squarefree modulus.
        steps: Walk length ``k``.
        table: Precomputed image modulo ``d``.
        report: Precomputed spectral report of the same table.
        cap: Enumeration cap used when ``table`` is not given.

    Returns:
        :obj:`EquidistributionResult`: Measured error and bound.
    """
    if table is None:
        table = generate_finite_image(preset, d, cap)

    graph = cayley_graph(table)
    if report is None:
        report = mean_zero_spectral_radius(graph)

    counts = exact_walk_distribution(graph, steps)
    words = graph.total_weight**steps
    n = graph.size
    worst = max(abs(int(c) * n - words) for c in counts)

    return EquidistributionResult(
        modulus=d,
        steps=steps,
        size=n,
        max_error=Fraction(worst, words * n),
        rho0=report.rho0,
        bound=math.sqrt(n) * report.rho0**steps,
    )


@dataclass(frozen=True)
class TripleProductGrowth:
    size: int
    triple_size: int

    @property
    def exponent(self) -> t.Optional[float]:
        """``log|AAA| / log|A|``, undefined for a single element."""
        if self.size <= 1:
            return None
        return math.log(self.triple_size) / math.log(self.size)


def _generated_subgroup(table: FiniteGroupTable, subset: t.Sequence[int]) -> t.FrozenSet[int]:
    reached = {0}
    frontier = [0]
    while frontier:
        following = []
        for x in frontier:
            for a in subset:
                y = table.multiply(x, a)
                if y not in reached:
                    reached.add(y)
                    following.append(y)
        frontier = following
    return frozenset(reached)


def triple_product_growth(
    table: FiniteGroupTable, subset: t.Iterable[t.Union[int, IntMatrix]]
) -> TripleProductGrowth:
    """Exact size of ``A·A·A`` for a generating subset ``A`` of a finite group table.

    Args:
        table: Finite group table.
        subset: Element indices or matrices (reduced modulo the table modulus).

    Raises:
        :obj:`NotGeneratingError`: ``A`` generates a proper subgroup.
    """
    indices = []
    for element in subset:
        index = element if isinstance(element, int) else table.index_of(element)
        if index is None:
            raise NotGeneratingError(f'{element} is not an element of the table', frozenset())
        indices.append(index)
    members = sorted(set(indices))

    subgroup = _generated_subgroup(table, members)
    if len(subgroup) != table.size:
        raise NotGeneratingError(f'Subset generates a subgroup of order {len(subgroup)} of {table.size}', subgroup)

    pairs = {table.multiply(a, b) for a in members for b in members}
    triples = {table.multiply(x, c) for x in pairs for c in members}
    return TripleProductGrowth(size=len(members), triple_size=len(triples))


@dataclass(frozen=True)
class SpectralRow:
    modulus: int
    size: int
    rho0: float
    diameter: int
    girth_lower_bound: t.Optional[int]
    converged: bool


def spectral_row(
    preset: 'GroupPreset',
    d: int,
    cap: int = ENUMERATION_CAP,
    tolerance: float = SPECTRAL_TOLERANCE,
    max_iterations: int = SPECTRAL_MAX_ITERATIONS,
    cache: t.Optional['TableBaseCache'] = None,
) -> SpectralRow:
    table = generate_finite_image(preset, d, cap, cache)
    graph = cayley_graph(table)
    report = mean_zero_spectral_radius(graph, tolerance, max_iterations)
    _logger.debug('d=%d: %d elements, rho0=%.6f', d, table.size, report.rho0)

    return SpectralRow(
        modulus=d,
        size=table.size,
        rho0=report.rho0,
        diameter=graph_diameter(graph),
        girth_lower_bound=girth_lower_bound(graph),
        converged=report.converged,
    )


def spectral_table(preset: 'GroupPreset', moduli: t.Iterable[int], **kwargs: t.Any) -> t.List[SpectralRow]:
    """One :class:`SpectralRow` per modulus, in input order."""
    return [spectral_row(preset, d, **kwargs) for d in moduli]


def uniform_rho(rows: t.Sequence[SpectralRow]) -> t.Optional[float]:
    """Largest ``ρ₀`` over the tested moduli; an empirical expansion constant, not a proven one."""
    nontrivial = [row.rho0 for row in rows if row.size > 1]
    return max(nontrivial) if nontrivial else None
