import logging
import typing as t
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from orbitsieve_core.consts import ENUMERATION_CAP
from orbitsieve_core.exactmath import IntMatrix, rank_mod_p
from orbitsieve_orbits.exceptions import EnumerationCapError
from orbitsieve_orbits.finite import generate_finite_image
from orbitsieve_orbits.presets import symplectic
from orbitsieve_sieve.density import DimensionFit, LocalDensity, dimension_estimate
from scipy.stats import binomtest

from orbitsieve_dt3m.exceptions import InvalidGenusError

if t.TYPE_CHECKING:
    from orbitsieve_orbits.cache.base_cache import TableBaseCache

_logger = logging.getLogger(__name__)

_DEFAULT_MONTE_CARLO_SAMPLES = 20_000
_CONFIDENCE_LEVEL = 0.95


def lagrangian_degenerate(gamma: IntMatrix, p: int) -> bool:
    """``⟨J, γJ⟩ ≠ F_p^{2g}``, i.e. the lower-left ``g × g`` block of ``γ`` is singular modulo ``p``."""
    g = gamma.shape[0] // 2
    block = IntMatrix.from_rows([row[:g] for row in gamma.rows[g:]])
    return rank_mod_p(block, p) < g


def degenerate_density(g: int, p: int) -> Fraction:
    """Closed form ``1 − p^{g(g+1)/2} / ∏_{i ≤ g} (p^i + 1)``.

    It is one minus the share of Lagrangians transverse to ``J``.
    """
    lagrangians = 1
    for i in range(1, g + 1):
        lagrangians *= p**i + 1
    return 1 - Fraction(p ** (g * (g + 1) // 2), lagrangians)


def _form(u: np.ndarray, v: np.ndarray, g: int, p: int) -> int:
    return int(u[:g] @ v[g:] - u[g:] @ v[:g]) % p


def uniform_symplectic(g: int, p: int, rng: np.random.Generator) -> IntMatrix:
    """Uniform element of ``Sp_{2g}(F_p)`` built as a random symplectic basis.

    ``e_i`` is uniform and non-zero in the complement of the pairs chosen so far and ``f_i`` is uniform among
    the vectors of that complement with ``ω(e_i, f_i) = 1``. The matrix has columns ``e_1 .. e_g, f_1 .. f_g``.
    """
    n = 2 * g
    es: t.List[np.ndarray] = []
    fs: t.List[np.ndarray] = []

    def project(v: np.ndarray) -> np.ndarray:
        for e, f in zip(es, fs):
            v = v - _form(v, f, g, p) * e + _form(v, e, g, p) * f
        return v % p

    for _ in range(g):
        while True:
            e = project(rng.integers(0, p, size=n, dtype=np.int64))
            if e.any():
                break
        while True:
            w = project(rng.integers(0, p, size=n, dtype=np.int64))
            c = _form(e, w, g, p)
            if c:
                break
        es.append(e)
        fs.append(w * pow(c, -1, p) % p)

    return IntMatrix.from_columns([list(map(int, v)) for v in es + fs])


@dataclass(frozen=True)
class OmegaDensity:
    """Density of ``{γ ∈ Sp_{2g}(F_p) : ⟨J, γJ⟩ ≠ F_p^{2g}}``.

    When ``exact`` is ``False`` the group was too large to enumerate and ``density`` is a Monte Carlo estimate
    over ``group_size`` uniform samples with the Wilson ``interval``.
    """

    genus: int
    prime: int
    count: int
    group_size: int
    exact: bool
    interval: t.Optional[t.Tuple[float, float]] = None

    @property
    def density(self) -> Fraction:
        return Fraction(self.count, self.group_size)

    @property
    def closed_form(self) -> Fraction:
        return degenerate_density(self.genus, self.prime)

    def local_density(self) -> LocalDensity:
        return LocalDensity(self.prime, self.count, self.group_size, self.density)


def omega_density_exact(
    g: int,
    p: int,
    cap: int = ENUMERATION_CAP,
    samples: int = _DEFAULT_MONTE_CARLO_SAMPLES,
    seed: int = 0,
    cache: t.Optional['TableBaseCache'] = None,
) -> OmegaDensity:
    """Exact density by enumerating ``Sp_{2g}(F_p)``, or a flagged Monte Carlo estimate above ``cap``.

    Args:
        g: Genus, ``1`` or ``2``.
        p: Prime.
        cap: Enumeration cap.
        samples: Number of uniform samples for the estimate.
        seed: Seed of the estimate.
        cache: Optional table cache.

    Returns:
        :obj:`OmegaDensity`: The density.
    """
    if g not in (1, 2):
        raise InvalidGenusError(f'Only genus 1 and 2 have built-in generators, got {g}')

    try:
        table = generate_finite_image(symplectic(g), p, cap, cache)
    except EnumerationCapError:
        _logger.info('Sp_%d(F_%d) exceeds the cap, estimating from %d uniform samples', 2 * g, p, samples)
    else:
        count = sum(1 for gamma in table.matrices() if lagrangian_degenerate(gamma, p))
        return OmegaDensity(genus=g, prime=p, count=count, group_size=table.size, exact=True)

    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, g, p])))
    count = sum(1 for _ in range(samples) if lagrangian_degenerate(uniform_symplectic(g, p, rng), p))
    interval = binomtest(count, samples).proportion_ci(confidence_level=_CONFIDENCE_LEVEL, method='wilson')
    return OmegaDensity(
        genus=g,
        prime=p,
        count=count,
        group_size=samples,
        exact=False,
        interval=(float(interval.low), float(interval.high)),
    )


@dataclass(frozen=True)
class DtDimensionFit:
    densities: t.Tuple[OmegaDensity, ...]
    fit: DimensionFit


def dt_dimension_fit(
    g: int,
    primes: t.Iterable[int],
    cap: int = ENUMERATION_CAP,
    samples: int = _DEFAULT_MONTE_CARLO_SAMPLES,
    seed: int = 0,
    cache: t.Optional['TableBaseCache'] = None,
) -> DtDimensionFit:
    """Fit the sieve dimension of the ``Ω_p`` family; it is ``1`` since ``ν_p(Ω_p) ≈ 1/p``."""
    densities = tuple(omega_density_exact(g, p, cap, samples, seed, cache) for p in sorted(set(primes)))
    return DtDimensionFit(densities=densities, fit=dimension_estimate(d.local_density() for d in densities))
