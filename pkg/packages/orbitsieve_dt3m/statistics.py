import logging
import math
import typing as t
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from orbitsieve_core.exactmath import FactorizationEffort, IntMatrix, factorize, primes_below
from orbitsieve_sieve.density import fitted_rate

from orbitsieve_dt3m.heegaard import HeegaardDatum, homology_group, homology_mod_p

if t.TYPE_CHECKING:
    from orbitsieve_orbits.walks import WalkEnsemble

_logger = logging.getLogger(__name__)

_CHUNK_SIZE = 128


@dataclass(frozen=True)
class HomologyRow:
    """One sample of a walk on ``Sp_{2g}(Z)``.

    ``omega`` is ``Ω(|H_1|)``, ``None`` when ``H_1`` is infinite or its order was not fully factored.
    ``small_primes`` counts the primes ``p < z`` with ``H_1 ⊗ F_p ≠ 0``.
    """

    index: int
    steps: int
    finite: bool
    torsion_order: int
    omega: t.Optional[int]
    small_primes: int


def _row(
    index: int, steps: int, g: IntMatrix, primes: t.Sequence[int], effort: t.Optional[FactorizationEffort]
) -> HomologyRow:
    datum = HeegaardDatum.from_matrix(g)
    result = homology_group(datum)

    omega: t.Optional[int] = None
    if result.finite:
        factorization = factorize(result.torsion_order, effort)
        omega = factorization.omega if factorization.complete else None

    return HomologyRow(
        index=index,
        steps=steps,
        finite=result.finite,
        torsion_order=result.order,
        omega=omega,
        small_primes=sum(1 for p in primes if homology_mod_p(datum, p) > 0),
    )


def _rows_chunk(
    start: int,
    steps: int,
    samples: t.List[IntMatrix],
    primes: t.List[int],
    effort: t.Optional[FactorizationEffort],
) -> t.List[HomologyRow]:
    return [_row(start + i, steps, g, primes, effort) for i, g in enumerate(samples)]


@dataclass(frozen=True)
class HomologyStatistics:
    steps: int
    z: float
    rows: t.Tuple[HomologyRow, ...]

    @property
    def infinite_fraction(self) -> float:
        if not self.rows:
            return 0.0
        return sum(1 for row in self.rows if not row.finite) / len(self.rows)

    @property
    def standard_error(self) -> float:
        if not self.rows:
            return 0.0
        q = self.infinite_fraction
        return math.sqrt(q * (1 - q) / len(self.rows))

    @property
    def sifted_fraction(self) -> float:
        """Share of samples whose ``H_1`` has no ``p``-part for any ``p < z``."""
        if not self.rows:
            return 0.0
        return sum(1 for row in self.rows if row.small_primes == 0) / len(self.rows)


def homology_statistics(
    ensemble: 'WalkEnsemble',
    z: float,
    effort: t.Optional[FactorizationEffort] = None,
    workers: int = 1,
) -> HomologyStatistics:
    """Per-sample homology rows of a walk ensemble on a symplectic preset.

    Args:
        ensemble: Walk samples in ``Sp_{2g}(Z)``.
        z: Small-prime cutoff.
        effort: Factorization effort for the torsion orders.
        workers: Worker processes; rows come back in sample order.

    Returns:
        :obj:`HomologyStatistics`: Rows and the infinite-``H_1`` fraction.
    """
    primes = primes_below(z)
    samples = list(ensemble.samples)
    starts = list(range(0, len(samples), _CHUNK_SIZE))
    chunks = [samples[start : start + _CHUNK_SIZE] for start in starts]

    rows: t.List[HomologyRow] = []
    if workers <= 1:
        for start, chunk in zip(starts, chunks):
            rows.extend(_rows_chunk(start, ensemble.steps, chunk, primes, effort))
    else:
        n = len(chunks)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            steps = [ensemble.steps] * n
            for chunk_rows in executor.map(_rows_chunk, starts, steps, chunks, [primes] * n, [effort] * n):
                rows.extend(chunk_rows)

    _logger.debug('Homology of %d samples at k=%d', len(rows), ensemble.steps)
    return HomologyStatistics(steps=ensemble.steps, z=z, rows=tuple(rows))


def infinite_fraction_rate(statistics: t.Iterable[HomologyStatistics]) -> t.Optional[float]:
    """Fitted per-step decay rate of the infinite-``H_1`` fraction over a grid of walk lengths."""
    return fitted_rate([(s.steps, s.infinite_fraction) for s in statistics])


def sifting_rate(statistics: t.Iterable[HomologyStatistics]) -> t.Optional[float]:
    """Fitted per-step rate of the share of samples with no small-prime part."""
    return fitted_rate([(s.steps, s.sifted_fraction) for s in statistics])
