import logging
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from orbitsieve_core.exactmath import ensure_squarefree, primes_below, squarefree_divisors

from orbitsieve_sieve.exceptions import SieveIdentityError

if t.TYPE_CHECKING:
    from orbitsieve_sieve.density import LocalDensity
    from orbitsieve_sieve.sequence import SieveSequence

_logger = logging.getLogger(__name__)

_DEFAULT_DIVISOR_BUDGET = 2**20


def congruence_sum(seq: 'SieveSequence', d: int) -> Fraction:
    """Congruence sum ``S_d = Σ weight(y)`` over items with ``d | n(y)``.

    Raises:
        :obj:`NonSquarefreeModulusError`: ``d`` is not squarefree.
    """
    ensure_squarefree(d)
    if d == 1:
        return seq.total_mass
    return seq.mass_where(seq.divisible_mask(d))


def _sieving_primes(z: float, primes: t.Optional[t.Iterable[int]]) -> t.List[int]:
    below = primes_below(z)
    if primes is None:
        return below
    allowed = set(primes)
    return [p for p in below if p in allowed]


def direct_sift(seq: 'SieveSequence', sieving_primes: t.Sequence[int]) -> Fraction:
    """Mass of items whose value has no prime factor in ``sieving_primes``."""
    keep = np.ones(len(seq.positive), dtype=bool)
    for p in sieving_primes:
        keep &= ~seq.divisible_mask(p)
    return seq.mass_where(keep)


@dataclass(frozen=True)
class SiftResult:
    """Sifted mass ``S(F, z)``.

    ``inclusion_exclusion`` is ``None`` when ``2^len(primes)`` exceeded the divisor budget; ``direct`` is
    always available.
    """

    z: float
    primes: t.Tuple[int, ...]
    direct: Fraction
    inclusion_exclusion: t.Optional[Fraction]

    @property
    def budget_exceeded(self) -> bool:
        return self.inclusion_exclusion is None

    @property
    def sifted(self) -> Fraction:
        return self.direct


def legendre_sift(
    seq: 'SieveSequence',
    primes: t.Optional[t.Iterable[int]],
    z: float,
    divisor_budget: int = _DEFAULT_DIVISOR_BUDGET,
) -> SiftResult:
    """Sift ``seq`` by the primes ``p < z`` (restricted to ``primes`` unless it is ``None``).

    The inclusion-exclusion sum ``Σ_{d | P(z)} μ(d) S_d`` is computed when ``P(z)`` has at most
    ``divisor_budget`` divisors and must agree exactly with the direct gcd count.

    Raises:
        :obj:`SieveIdentityError`: The two counts disagree.
    """
    sieving_primes = _sieving_primes(z, primes)
    direct = direct_sift(seq, sieving_primes)

    inclusion_exclusion: t.Optional[Fraction] = None
    if 2 ** len(sieving_primes) > divisor_budget:
        _logger.info('P(z) has 2^%d divisors, above the budget; reporting the direct count only', len(sieving_primes))
    else:
        inclusion_exclusion = Fraction(0)
        for d, mu in squarefree_divisors(sieving_primes):
            inclusion_exclusion += mu * congruence_sum(seq, d)

        if inclusion_exclusion != direct:
            raise SieveIdentityError(f'Inclusion-exclusion gives {inclusion_exclusion}, direct count {direct}')

    return SiftResult(z=z, primes=tuple(sieving_primes), direct=direct, inclusion_exclusion=inclusion_exclusion)


@dataclass(frozen=True)
class SiftedBracket:
    """Sifted mass against the local-density prediction and the ``(log z)^-κ`` scale."""

    z: float
    kappa: float
    sifted: Fraction
    total: Fraction
    density_product: Fraction

    @property
    def predicted(self) -> Fraction:
        """``S(F) · Π_{p<z} (1 − g(p))``."""
        return self.total * self.density_product

    @property
    def normalized(self) -> t.Optional[float]:
        """``S(F, z) · (log z)^κ / S(F)``; bounded above and below when the sieve has dimension ``κ``."""
        if not self.total:
            return None
        return float(self.sifted / self.total) * math.log(self.z) ** self.kappa


def sifted_bracket(
    seq: 'SieveSequence', densities: t.Iterable['LocalDensity'], z: float, kappa: float
) -> SiftedBracket:
    by_prime = {density.prime: density.density for density in densities}
    sieving_primes = [p for p in primes_below(z) if p in by_prime]

    product = Fraction(1)
    for p in sieving_primes:
        product *= 1 - by_prime[p]

    return SiftedBracket(
        z=z,
        kappa=kappa,
        sifted=direct_sift(seq, sieving_primes),
        total=seq.total_mass,
        density_product=product,
    )


@dataclass(frozen=True)
class ZeroSetBound:
    prime: int
    bound: Fraction
    observed: Fraction

    @property
    def holds(self) -> bool:
        return self.observed <= self.bound


def zero_set_bound(seq: 'SieveSequence', densities: t.Iterable['LocalDensity']) -> t.Optional[ZeroSetBound]:
    """Compare the zero-set share of ``seq`` with the smallest local density.

    Items with ``n(y) = 0`` lie in ``Ω_p`` for every ``p``, so their share is at most ``min_p ν_p(Ω_p)`` up to
    the remainder terms. Returns ``None`` for an empty sequence or no densities.
    """
    densities = list(densities)
    total = seq.total_mass + seq.zero_mass
    if not densities or not total:
        return None

    smallest = min(densities, key=lambda density: (density.density, density.prime))
    return ZeroSetBound(prime=smallest.prime, bound=smallest.density, observed=seq.zero_mass / total)
