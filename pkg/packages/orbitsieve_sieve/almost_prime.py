import logging
import math
import typing as t
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from orbitsieve_core.exactmath import FactorizationEffort, Polynomial, factorize
from orbitsieve_orbits.values import orbit_value

if t.TYPE_CHECKING:
    from orbitsieve_orbits.walks import WalkEnsemble

_logger = logging.getLogger(__name__)

_CHUNK_SIZE = 256


@dataclass(frozen=True)
class OmegaObservation:
    """``Ω`` of one value, possibly from a partial factorization.

    ``omega`` counts the primes found with multiplicity. When ``complete`` is ``False`` an unfactored composite
    cofactor remains, which adds at least two more.
    """

    zero: bool
    omega: int
    complete: bool

    def passes_lower(self, r: int) -> bool:
        """``Ω <= r`` for certain; an unfactored value counts as failing."""
        return not self.zero and self.complete and self.omega <= r

    def passes_upper(self, r: int) -> bool:
        """``Ω <= r`` is still possible given the partial factorization."""
        if self.zero:
            return False
        return (self.omega if self.complete else self.omega + 2) <= r


def observe_omega(value: int, effort: t.Optional[FactorizationEffort] = None) -> OmegaObservation:
    if value == 0:
        return OmegaObservation(zero=True, omega=0, complete=True)

    factorization = factorize(value, effort)
    return OmegaObservation(zero=False, omega=factorization.omega, complete=factorization.complete)


def _observe_chunk(values: t.List[int], effort: t.Optional[FactorizationEffort]) -> t.List[OmegaObservation]:
    return [observe_omega(value, effort) for value in values]


def observe_ensemble(
    ensemble: 'WalkEnsemble',
    x0: t.Sequence[int],
    f: Polynomial,
    effort: t.Optional[FactorizationEffort] = None,
    workers: int = 1,
) -> t.Tuple[OmegaObservation, ...]:
    """Factor ``f(γ · x0)`` for every sample, in sample order."""
    values = [orbit_value(g, x0, f) for g in ensemble.samples]
    chunks = [values[start : start + _CHUNK_SIZE] for start in range(0, len(values), _CHUNK_SIZE)]

    observations: t.List[OmegaObservation] = []
    if workers <= 1:
        for chunk in chunks:
            observations.extend(_observe_chunk(chunk, effort))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for observed in executor.map(_observe_chunk, chunks, [effort] * len(chunks)):
                observations.extend(observed)

    unfactored = sum(1 for o in observations if not o.complete)
    if unfactored:
        _logger.info('%d of %d orbit values at k=%d left partially factored', unfactored, len(values), ensemble.steps)
    return tuple(observations)


@dataclass(frozen=True)
class AlmostPrimeMeasure:
    """Fraction of samples with ``Ω(f(γ · x0)) <= r``, bracketed by the unfactored values.

    ``lower`` counts an unfactored value as failing and ``upper`` as passing whenever the primes found plus two
    stay within ``r``. ``zero_fraction`` is the share of ``f(γ · x0) = 0``, which never passes.
    """

    steps: int
    r: int
    samples: int
    lower: Fraction
    upper: Fraction
    zero_fraction: Fraction
    unfactored: int

    @property
    def standard_error(self) -> float:
        """Binomial standard error of ``lower``."""
        if not self.samples:
            return 0.0
        p = float(self.lower)
        return math.sqrt(p * (1 - p) / self.samples)


def measure_observations(steps: int, observations: t.Sequence[OmegaObservation], r: int) -> AlmostPrimeMeasure:
    n = len(observations)
    if not n:
        return AlmostPrimeMeasure(steps, r, 0, Fraction(0), Fraction(0), Fraction(0), 0)

    return AlmostPrimeMeasure(
        steps=steps,
        r=r,
        samples=n,
        lower=Fraction(sum(1 for o in observations if o.passes_lower(r)), n),
        upper=Fraction(sum(1 for o in observations if o.passes_upper(r)), n),
        zero_fraction=Fraction(sum(1 for o in observations if o.zero), n),
        unfactored=sum(1 for o in observations if not o.complete),
    )


def almost_prime_measure(
    ensemble: 'WalkEnsemble',
    x0: t.Sequence[int],
    f: Polynomial,
    r: int,
    effort: t.Optional[FactorizationEffort] = None,
    workers: int = 1,
) -> AlmostPrimeMeasure:
    """Empirical ``π_f`` of a walk ensemble at ``r``.

    Args:
        ensemble: Walk samples.
        x0: Base point of the orbit.
        f: Polynomial on the orbit.
        r: Bound on the number of prime factors.
        effort: Factorization effort bound.
        workers: Worker processes for the factorizations.

    Returns:
        :obj:`AlmostPrimeMeasure`: Bracketed fraction and zero-set fraction.
    """
    return measure_observations(ensemble.steps, observe_ensemble(ensemble, x0, f, effort, workers), r)


def saturation_table(
    ensembles: t.Iterable['WalkEnsemble'],
    x0: t.Sequence[int],
    f: Polynomial,
    r_values: t.Iterable[int],
    effort: t.Optional[FactorizationEffort] = None,
    workers: int = 1,
) -> t.List[AlmostPrimeMeasure]:
    """``π_f`` over a grid of walk lengths and ``r``; every ensemble is factored once."""
    r_values = sorted(set(r_values))
    rows = []
    for ensemble in ensembles:
        observations = observe_ensemble(ensemble, x0, f, effort, workers)
        rows.extend(measure_observations(ensemble.steps, observations, r) for r in r_values)
    return rows


def predicted_saturation_r(lam: float, beta: float, s: float = 1.0) -> float:
    """Predicted saturation ``r = s · log λ / log β``.

    A value of size ``λ^k`` without prime factors below ``β^k`` has at most this many prime factors per unit ``s``.

    Args:
        lam: Growth rate ``λ > 1`` of ``|f(γ · x0)|`` per step.
        beta: Sifting rate ``β > 1``.
        s: Multiplier, the degree-type factor of ``f``.
    """
    if lam <= 1 or beta <= 1:
        raise ValueError(f'Rates must exceed 1, got lambda={lam}, beta={beta}')
    return s * math.log(lam) / math.log(beta)
