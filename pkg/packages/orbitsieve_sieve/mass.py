import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

from orbitsieve_core.exactmath import IntMatrix, primes_below, squarefree_below

if t.TYPE_CHECKING:
    from orbitsieve_orbits.walks import WalkEnsemble

    from orbitsieve_sieve.density import LocalDensity


@dataclass(frozen=True)
class LargeSieveMass:
    """``H = Σ_{d<z} μ(d)² Π_{p|d} ν_p/(1 − ν_p)``.

    ``H`` is ``None`` (infinite) when some ``ν_p = 1``: nothing survives sifting at the primes in ``full``.
    """

    z: float
    mass: t.Optional[Fraction]
    full: t.Tuple[int, ...]

    def sifted_upper_bound(self, total: Fraction) -> Fraction:
        """Large sieve bound ``total / H`` on the sifted mass."""
        if self.mass is None:
            return Fraction(0)
        return total / self.mass


def large_sieve_mass(densities: t.Iterable['LocalDensity'], z: float) -> LargeSieveMass:
    by_prime = {density.prime: density.density for density in densities}
    primes = [p for p in primes_below(z) if p in by_prime]

    full = tuple(p for p in primes if by_prime[p] == 1)
    if full:
        return LargeSieveMass(z=z, mass=None, full=full)

    ratio = {p: by_prime[p] / (1 - by_prime[p]) for p in primes}
    total = Fraction(0)
    for chosen in squarefree_below(primes, z):
        term = Fraction(1)
        for p in chosen:
            term *= ratio[p]
        total += term

    return LargeSieveMass(z=z, mass=total, full=())


@dataclass(frozen=True)
class ConcentrationResult:
    """Mean square of ``Σ_{p<z} [γ mod p ∈ Ω_p] − Σ_{p<z} ν_p`` over samples.

    ``expected`` is the independent-Bernoulli value ``Σ ν_p (1 − ν_p)``; ``standard_error`` is the standard error
    of the sample mean square.
    """

    z: float
    samples: int
    mean_square: float
    expected: float
    standard_error: float

    @property
    def ratio(self) -> t.Optional[float]:
        if self.expected == 0:
            return None
        return self.mean_square / self.expected


def prime_divisor_concentration(
    samples: t.Union['WalkEnsemble', t.Sequence[IntMatrix]],
    predicates: t.Mapping[int, t.Callable[[IntMatrix], bool]],
    densities: t.Iterable['LocalDensity'],
    z: float,
) -> ConcentrationResult:
    """Empirical concentration of the number of primes ``p < z`` at which a sample lands in ``Ω_p``.

    Args:
        samples: Walk ensemble or matrices.
        predicates: ``Ω_p`` membership test of the reduction modulo ``p``, per prime.
        densities: Exact ``ν_p(Ω_p)`` per prime.
        z: Sifting level.
    """
    matrices = list(getattr(samples, 'samples', samples))
    by_prime = {density.prime: density.density for density in densities}
    primes = [p for p in primes_below(z) if p in predicates and p in by_prime]

    expected_mean = float(sum((by_prime[p] for p in primes), Fraction(0)))
    expected = float(sum((by_prime[p] * (1 - by_prime[p]) for p in primes), Fraction(0)))
    if not primes or not matrices:
        return ConcentrationResult(z=z, samples=len(matrices), mean_square=0.0, expected=expected, standard_error=0.0)

    squares = []
    for g in matrices:
        hits = sum(1 for p in primes if predicates[p](g.reduce(p)))
        squares.append((hits - expected_mean) ** 2)

    n = len(squares)
    mean_square = math.fsum(squares) / n
    spread = math.fsum((s - mean_square) ** 2 for s in squares) / max(n - 1, 1)
    return ConcentrationResult(
        z=z,
        samples=n,
        mean_square=mean_square,
        expected=expected,
        standard_error=math.sqrt(spread / n),
    )
