import logging
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

from orbitsieve_core.exactmath import primes_below, squarefree_below

from orbitsieve_sieve.exceptions import DivisorBudgetError
from orbitsieve_sieve.sifting import congruence_sum

if t.TYPE_CHECKING:
    from orbitsieve_sieve.density import LocalDensity
    from orbitsieve_sieve.sequence import SieveSequence

_logger = logging.getLogger(__name__)

_DEFAULT_DIVISOR_BUDGET = 2**16


@dataclass(frozen=True)
class Remainder:
    d: int
    congruence_sum: Fraction
    density: Fraction
    remainder: Fraction


@dataclass(frozen=True)
class LevelLedger:
    """Remainders ``r_d = S_d − ν_d(Ω_d)·S`` for squarefree ``d < D`` and the level constants.

    ``delta`` is ``max log|Ω_p| / log p`` and ``delta_1`` is ``max log|Y_p| / log p`` over the primes that carry
    a density. ``beta_limit`` is ``ρ^(−1/(1 + Δ + Δ₁/2))``, the admissible ``β`` bound of a spectral gap ``ρ``;
    it is ``None`` without ``ρ``.
    """

    cutoff: float
    remainders: t.Tuple[Remainder, ...]
    delta: float
    delta_1: float
    rho: t.Optional[float]

    @property
    def aggregate(self) -> Fraction:
        """``R(D) = Σ_{d<D} |r_d|``."""
        return sum((abs(r.remainder) for r in self.remainders), Fraction(0))

    @property
    def max_remainder(self) -> Fraction:
        return max((abs(r.remainder) for r in self.remainders), default=Fraction(0))

    @property
    def beta_limit(self) -> t.Optional[float]:
        if self.rho is None or not 0 < self.rho < 1:
            return None
        return self.rho ** (-1 / (1 + self.delta + self.delta_1 / 2))


def _level_exponent(sizes: t.Iterable[t.Tuple[int, int]]) -> float:
    return max((math.log(size) / math.log(p) for p, size in sizes if size > 0), default=0.0)


def level_ledger(
    seq: 'SieveSequence',
    densities: t.Iterable['LocalDensity'],
    cutoff: float,
    rho: t.Optional[float] = None,
    divisor_budget: int = _DEFAULT_DIVISOR_BUDGET,
) -> LevelLedger:
    """Tabulate the remainders of ``seq`` against the multiplicative density ``ν_d = Π_{p|d} ν_p``.

    Args:
        seq: Sieve sequence.
        densities: Local densities; only primes that carry one enter ``d``.
        cutoff: Level ``D``; moduli ``d < D`` are tabulated.
        rho: Mean-zero spectral radius, for ``beta_limit``.
        divisor_budget: Maximum number of moduli.

    Returns:
        :obj:`LevelLedger`: The ledger.

    Raises:
        :obj:`DivisorBudgetError`: More than ``divisor_budget`` squarefree moduli lie below ``cutoff``.
    """
    densities = list(densities)
    by_prime = {density.prime: density.density for density in densities}
    primes = [p for p in primes_below(cutoff) if p in by_prime]

    total = seq.total_mass
    remainders = []
    for chosen in squarefree_below(primes, cutoff):
        if len(remainders) >= divisor_budget:
            raise DivisorBudgetError(f'More than {divisor_budget} squarefree moduli below D={cutoff}')

        d, density = 1, Fraction(1)
        for p in chosen:
            d *= p
            density *= by_prime[p]

        s_d = congruence_sum(seq, d)
        remainders.append(Remainder(d=d, congruence_sum=s_d, density=density, remainder=s_d - density * total))

    _logger.debug('Ledger at D=%s: %d moduli', cutoff, len(remainders))
    return LevelLedger(
        cutoff=cutoff,
        remainders=tuple(sorted(remainders, key=lambda r: r.d)),
        delta=_level_exponent((density.prime, density.omega_size) for density in densities),
        delta_1=_level_exponent((density.prime, density.group_size) for density in densities),
        rho=rho,
    )
