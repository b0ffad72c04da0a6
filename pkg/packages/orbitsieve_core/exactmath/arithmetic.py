import itertools
import math
import typing as t

from sympy import primerange

from orbitsieve_core.consts import OMEGA_INFINITY
from orbitsieve_core.exactmath.factor import FactorizationEffort, factorize
from orbitsieve_core.exceptions import FactorizationEffortError, InvalidModulusError, NonSquarefreeModulusError

OmegaValue = t.Union[int, float]


def omega(n: int, effort: t.Optional[FactorizationEffort] = None) -> OmegaValue:
    """Number of prime factors of ``n``, counted with multiplicity.

    Note:
        ``omega(0)`` is :obj:`OMEGA_INFINITY`.

    Raises:
        :obj:`FactorizationEffortError`: ``n`` could not be fully factored within ``effort``.
    """
    if n == 0:
        return OMEGA_INFINITY

    factorization = factorize(n, effort)
    if not factorization.complete:
        bits = factorization.cofactor.bit_length()
        raise FactorizationEffortError(f'Unfactored cofactor of {bits} bits', factorization)

    return factorization.omega


def moebius(d: int, effort: t.Optional[FactorizationEffort] = None) -> int:
    if d <= 0:
        raise InvalidModulusError(f'Moebius function is defined for positive integers only, got {d}')

    factorization = factorize(d, effort)
    if not factorization.complete:
        raise FactorizationEffortError(f'Cannot decide whether {d} is squarefree', factorization)

    if any(exponent > 1 for _, exponent in factorization.factors):
        return 0

    return -1 if len(factorization.factors) % 2 else 1


def is_squarefree(d: int, effort: t.Optional[FactorizationEffort] = None) -> bool:
    return d >= 1 and moebius(d, effort) != 0


def prime_factors(d: int) -> t.Tuple[int, ...]:
    """Distinct primes dividing ``d``."""
    factorization = factorize(d)
    if not factorization.complete:
        raise FactorizationEffortError(f'Cannot list the prime factors of {d}', factorization)

    return factorization.primes


def ensure_squarefree(d: int, minimum: int = 1, effort: t.Optional[FactorizationEffort] = None) -> t.Tuple[int, ...]:
    """Validate a squarefree modulus and return its prime factors.

    Raises:
        :obj:`InvalidModulusError`: ``d < minimum``.
        :obj:`NonSquarefreeModulusError`: ``d`` has a square factor.
        :obj:`FactorizationEffortError`: ``d`` could not be fully factored within ``effort``.
    """
    if d < minimum:
        raise InvalidModulusError(f'Modulus must be at least {minimum}, got {d}')

    factorization = factorize(d, effort)
    if not factorization.complete:
        raise FactorizationEffortError(f'Cannot decide whether {d} is squarefree', factorization)
    if any(exponent > 1 for _, exponent in factorization.factors):
        raise NonSquarefreeModulusError(f'Modulus {d} is not squarefree')

    return factorization.primes


def primes_below(z: float) -> t.List[int]:
    """Primes ``p < z``."""
    if z <= 2:
        return []
    return list(primerange(2, math.ceil(z)))


def squarefree_divisors(primes: t.Iterable[int]) -> t.Iterator[t.Tuple[int, int]]:
    """Yield ``(d, moebius(d))`` for every divisor ``d`` of the product of ``primes``."""
    primes = sorted(set(primes))
    for size in range(len(primes) + 1):
        sign = -1 if size % 2 else 1
        for subset in itertools.combinations(primes, size):
            d = 1
            for p in subset:
                d *= p
            yield d, sign


def squarefree_below(primes: t.Sequence[int], z: float) -> t.Iterator[t.Tuple[int, ...]]:
    """Sets of distinct ``primes`` with product below ``z``, each in increasing order, the empty set included."""
    primes = sorted(set(primes))
    stack: t.List[t.Tuple[int, int, t.Tuple[int, ...]]] = [(0, 1, ())]
    while stack:
        start, product, chosen = stack.pop()
        yield chosen
        for i in range(start, len(primes)):
            if product * primes[i] >= z:
                break
            stack.append((i + 1, product * primes[i], chosen + (primes[i],)))
