import logging
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from orbitsieve_core.exactmath import IntMatrix, Polynomial, ensure_squarefree, primes_below
from orbitsieve_core.exceptions import DimensionMismatchError
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_gcd, gf_pow_mod, gf_sub

from orbitsieve_sieve.exceptions import InsufficientDataError, VanishingPolynomialError
from orbitsieve_sieve.sequence import SieveSequence
from orbitsieve_sieve.sifting import congruence_sum

if t.TYPE_CHECKING:
    from orbitsieve_orbits.finite import FiniteGroupTable

_logger = logging.getLogger(__name__)

_EVALUATION_LIMIT = 64
_MIN_FIT_PRIMES = 5


@dataclass(frozen=True)
class LocalDensity:
    """Local density ``ν_p(Ω_p)`` of the excluded set ``Ω_p`` at a prime.

    Args:
        prime: The prime ``p`` (or the modulus of a composite local table).
        omega_size: ``|Ω_p|``.
        group_size: ``|Y_p|``.
        density: ``ν_p(Ω_p)``; ``omega_size / group_size`` under the uniform measure.
    """

    prime: int
    omega_size: int
    group_size: int
    density: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.density <= 1:
            raise ValueError(f'Density at p={self.prime} must lie in [0, 1], got {self.density}')

    @classmethod
    def uniform(cls, prime: int, omega_size: int, group_size: int) -> 'LocalDensity':
        return cls(prime, omega_size, group_size, Fraction(omega_size, group_size))


def local_density(table: 'FiniteGroupTable', omega_predicate: t.Callable[[IntMatrix], bool]) -> LocalDensity:
    """Exact uniform density of ``{γ in the table : omega_predicate(γ)}``."""
    count = sum(1 for g in table.matrices() if omega_predicate(g))
    return LocalDensity.uniform(table.modulus, count, table.size)


def orbit_zero_predicate(x0: t.Sequence[int], f: Polynomial, p: int) -> t.Callable[[IntMatrix], bool]:
    """Predicate ``f(γ · x0) ≡ 0 (mod p)``."""

    def predicate(g: IntMatrix) -> bool:
        return f.evaluate_mod(g.apply(x0), p) == 0

    return predicate


def _roots_mod_prime(coefficients: t.List[int], p: int) -> int:
    if p <= _EVALUATION_LIMIT:
        count = 0
        for x in range(p):
            value = 0
            for c in coefficients:
                value = (value * x + c) % p
            count += value == 0
        return count

    f = gf_from_int_poly(coefficients, p)
    if len(f) <= 1:
        return 0

    # distinct roots in F_p are the roots of gcd(f, x^p - x)
    x_to_p = gf_pow_mod([ZZ(1), ZZ(0)], p, f, p, ZZ)
    common = gf_gcd(f, gf_sub(x_to_p, [ZZ(1), ZZ(0)], p, ZZ), p, ZZ)
    return len(common) - 1


def poly_root_count(f: Polynomial, d: int) -> int:
    """Number ``ρ_f(d)`` of roots of ``f`` modulo the squarefree ``d``, multiplicative over the primes of ``d``.

    Raises:
        :obj:`VanishingPolynomialError`: ``f`` is identically zero modulo a prime of ``d``.
    """
    if f.nvars != 1:
        raise DimensionMismatchError('Root counts are defined for univariate polynomials')

    coefficients = f.dense_coefficients()
    count = 1
    for p in ensure_squarefree(d):
        if f.is_zero_mod(p):
            raise VanishingPolynomialError(f'{f} vanishes identically modulo {p}')
        count *= _roots_mod_prime(coefficients, p)
    return count


def polynomial_densities(f: Polynomial, x: float) -> t.List[LocalDensity]:
    """Densities ``g(p) = ρ_f(p)/p`` for primes ``p <= x``; primes where ``f`` vanishes are skipped."""
    coefficients = f.dense_coefficients()
    densities = []
    for p in primes_below(x + 1):
        if f.is_zero_mod(p):
            _logger.info('Skipping p=%d: %s vanishes identically', p, f)
            continue
        densities.append(LocalDensity.uniform(p, _roots_mod_prime(coefficients, p), p))
    return densities


@dataclass(frozen=True)
class ClassicalRemainder:
    """``|S_d − ρ_f(d)·X/d|`` for the sequence ``f(1) .. f(X)``; at most ``ρ_f(d)`` by residue-class splitting."""

    d: int
    x: int
    congruence_sum: Fraction
    roots: int

    @property
    def remainder(self) -> Fraction:
        return abs(self.congruence_sum - Fraction(self.roots * self.x, self.d))

    @property
    def holds(self) -> bool:
        return self.remainder <= self.roots


def classical_remainder(
    f: Polynomial, d: int, x: int, sequence: t.Optional[SieveSequence] = None
) -> ClassicalRemainder:
    sequence = sequence or SieveSequence.from_polynomial(f, x)
    return ClassicalRemainder(d=d, x=x, congruence_sum=congruence_sum(sequence, d), roots=poly_root_count(f, d))


@dataclass(frozen=True)
class DimensionFit:
    """Least-squares fit of ``Σ_{p<=x} g(p) log p ≈ κ log x + c`` at prime arguments ``x``."""

    kappa: float
    intercept: float
    residual: float
    primes: int
    x: int


def dimension_estimate(densities: t.Iterable[LocalDensity]) -> DimensionFit:
    """Estimate the sieve dimension ``κ`` from local densities.

    Args:
        densities: Local densities, at most one per prime.

    Returns:
        :obj:`DimensionFit`: Slope, intercept and root-mean-square residual of the fit.

    Raises:
        :obj:`InsufficientDataError`: Fewer than five primes.
    """
    ordered = sorted(densities, key=lambda density: density.prime)
    if len(ordered) < _MIN_FIT_PRIMES:
        raise InsufficientDataError(f'Dimension fit needs at least {_MIN_FIT_PRIMES} primes, got {len(ordered)}')

    primes = np.array([density.prime for density in ordered], dtype=np.float64)
    g = np.array([float(density.density) for density in ordered], dtype=np.float64)
    log_x = np.log(primes)
    partial_sums = np.cumsum(g * log_x)

    design = np.column_stack([log_x, np.ones_like(log_x)])
    (kappa, intercept), *_ = np.linalg.lstsq(design, partial_sums, rcond=None)
    residual = float(np.sqrt(np.mean((design @ np.array([kappa, intercept]) - partial_sums) ** 2)))

    return DimensionFit(
        kappa=float(kappa),
        intercept=float(intercept),
        residual=residual,
        primes=len(ordered),
        x=ordered[-1].prime,
    )


def fitted_rate(values: t.Sequence[t.Tuple[int, float]]) -> t.Optional[float]:
    """Per-step rate ``exp(slope)`` of the least-squares line through ``(k, log value)``; ``None`` below two points."""
    points = [(k, math.log(v)) for k, v in values if v > 0]
    if len(points) < 2:
        return None

    ks = np.array([k for k, _ in points], dtype=np.float64)
    logs = np.array([v for _, v in points], dtype=np.float64)
    slope, _ = np.polyfit(ks, logs, 1)
    return float(math.exp(slope))
