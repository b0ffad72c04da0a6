import functools
import logging
import math
import random
import typing as t
from collections import Counter
from dataclasses import dataclass, field

from sympy import isprime, primerange

from orbitsieve_core.consts import FACTORIZATION_MAX_BITS, RHO_ITERATION_BUDGET, TRIAL_DIVISION_BOUND
from orbitsieve_core.exceptions import FactorizationError

_logger = logging.getLogger(__name__)

_TRIAL_BLOCK_SIZE = 256

PrimePowers = t.Tuple[t.Tuple[int, int], ...]


@dataclass(frozen=True)
class FactorizationEffort:
    """Effort bound for :func:`factorize`.

    Args:
        trial_bound: Primes up to this bound are removed by trial division.
        max_bits: Composite cofactors above this size are left unfactored.
        rho_budget: Iteration budget of a single Pollard-Brent attempt.
        seed: Seed of the Pollard-Brent starting points.
    """

    trial_bound: int = TRIAL_DIVISION_BOUND
    max_bits: int = FACTORIZATION_MAX_BITS
    rho_budget: int = RHO_ITERATION_BUDGET
    seed: int = 0


DEFAULT_EFFORT = FactorizationEffort()


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a non-zero integer.

    ``cofactor`` is the product of the composite parts that were left unfactored; it is ``1`` when the
    factorization is complete. The factors never include ``cofactor``.
    """

    sign: int
    factors: PrimePowers = field(default_factory=tuple)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def omega(self) -> int:
        """Number of prime factors found, with multiplicity."""
        return sum(exponent for _, exponent in self.factors)

    @property
    def omega_lower_bound(self) -> int:
        """Smallest Ω compatible with the partial factorization (a composite cofactor has at least two)."""
        if self.complete:
            return self.omega
        return self.omega + 2

    @property
    def primes(self) -> t.Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        result = self.sign * self.cofactor
        for p, exponent in self.factors:
            result *= p**exponent
        return result


@functools.lru_cache(maxsize=4)
def _trial_blocks(bound: int) -> t.Tuple[t.Tuple[t.Tuple[int, ...], int], ...]:
    primes = list(primerange(2, bound + 1))
    blocks = []
    for start in range(0, len(primes), _TRIAL_BLOCK_SIZE):
        chunk = tuple(primes[start : start + _TRIAL_BLOCK_SIZE])
        blocks.append((chunk, math.prod(chunk)))
    return tuple(blocks)


def _trial_divide(n: int, bound: int, found: t.Counter[int]) -> int:
    for chunk, product in _trial_blocks(bound):
        if chunk[0] * chunk[0] > n:
            # every prime below chunk[0] is already removed, so n is 1 or a prime
            break

        g = math.gcd(n, product)
        if g == 1:
            continue

        for p in chunk:
            if g % p:
                continue
            while n % p == 0:
                n //= p
                found[p] += 1

    return n


def _pollard_brent(n: int, budget: int, rng: random.Random) -> t.Optional[int]:
    """Return a non-trivial divisor of the composite ``n`` or ``None`` when the budget is spent."""
    if n % 2 == 0:
        return 2

    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2

        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)

        if 1 < g < n:
            return g

    return None


def factorize(n: int, effort: t.Optional[FactorizationEffort] = None) -> Factorization:
    """Factor a non-zero integer.

    Trial division removes the primes up to ``effort.trial_bound``; the remaining composite parts are split
    with Brent's variant of Pollard's rho. Every reported prime passes :func:`sympy.isprime`. Parts that
    exceed ``effort.max_bits`` or the rho budget are returned in ``cofactor`` instead of being counted as
    primes.

    Args:
        n: Integer to factor.
        effort: Effort bound.

    Returns:
        :obj:`Factorization`: Possibly partial factorization of ``n``.
    """
    if n == 0:
        raise FactorizationError('Zero has no factorization')

    effort = effort or DEFAULT_EFFORT
    sign = -1 if n < 0 else 1
    found: t.Counter[int] = Counter()

    remaining = _trial_divide(abs(n), effort.trial_bound, found)

    cofactor = 1
    rng = random.Random(f'{effort.seed}:{n}')
    stack = [remaining] if remaining > 1 else []
    while stack:
        part = stack.pop()
        if isprime(part):
            found[part] += 1
            continue

        if part.bit_length() > effort.max_bits:
            _logger.debug('Leaving a %d-bit cofactor unfactored', part.bit_length())
            cofactor *= part
            continue

        divisor = _pollard_brent(part, effort.rho_budget, rng)
        if divisor is None:
            _logger.debug('Rho budget exhausted on a %d-bit cofactor', part.bit_length())
            cofactor *= part
            continue

        stack.extend((divisor, part // divisor))

    return Factorization(sign=sign, factors=tuple(sorted(found.items())), cofactor=cofactor)
