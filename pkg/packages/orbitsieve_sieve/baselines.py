import math
import typing as t
from dataclasses import dataclass

import numpy as np
from orbitsieve_core.exactmath import primes_below


def omega_table(x: int) -> np.ndarray:
    """``Ω(n)`` for ``0 <= n <= x`` by a prime-power sieve; the entries at ``0`` and ``1`` are ``0``."""
    table = np.zeros(x + 1, dtype=np.int64)
    for p in primes_below(x + 1):
        q = p
        while q <= x:
            table[q::q] += 1
            q *= p
    return table


@dataclass(frozen=True)
class HardyRamanujanCheck:
    """``Σ_{n<=X} (Ω(n) − log log X)²`` against ``X log log X``."""

    x: int
    variance_sum: float
    scale: float

    @property
    def ratio(self) -> float:
        return self.variance_sum / self.scale


def hardy_ramanujan_variance(x: int, table: t.Optional[np.ndarray] = None) -> HardyRamanujanCheck:
    if x < 16:
        raise ValueError(f'log log X must be positive and meaningful, got X={x}')

    table = omega_table(x) if table is None else table
    loglog = math.log(math.log(x))
    deviations = table[1 : x + 1].astype(np.float64) - loglog
    return HardyRamanujanCheck(x=x, variance_sum=float(np.sum(deviations**2)), scale=x * loglog)


@dataclass(frozen=True)
class PrimeCountCheck:
    x: int
    count: int
    approximation: float

    @property
    def relative_error(self) -> float:
        """``|π(X) − X/log X| / π(X)``."""
        return abs(self.count - self.approximation) / self.count


def prime_count_check(x: int) -> PrimeCountCheck:
    return PrimeCountCheck(x=x, count=len(primes_below(x + 1)), approximation=x / math.log(x))


@dataclass(frozen=True)
class AlmostPrimeCount:
    """Number of ``2 <= n <= X`` with ``Ω(n) = k`` next to ``X (log log X)^(k−1) / ((k−1)! log X)``."""

    k: int
    count: int
    prediction: float


def almost_prime_counts(x: int, kmax: int, table: t.Optional[np.ndarray] = None) -> t.List[AlmostPrimeCount]:
    if x < 3:
        raise ValueError(f'Almost-prime counts need X >= 3, got X={x}')

    table = omega_table(x) if table is None else table
    counts = np.bincount(table[2 : x + 1], minlength=kmax + 1)
    log_x, loglog = math.log(x), math.log(math.log(x))
    return [
        AlmostPrimeCount(
            k=k,
            count=int(counts[k]),
            prediction=x * loglog ** (k - 1) / (math.factorial(k - 1) * log_x),
        )
        for k in range(1, kmax + 1)
    ]
