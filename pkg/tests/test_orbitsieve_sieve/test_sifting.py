import math
import typing as t
from fractions import Fraction

import pytest
from orbitsieve_core.exactmath import Polynomial, is_squarefree
from orbitsieve_sieve import (
    LocalDensity,
    SieveSequence,
    classical_remainder,
    direct_sift,
    legendre_sift,
    sifted_bracket,
    zero_set_bound,
)


def _reciprocal_densities(*primes: int) -> t.List[LocalDensity]:
    return [LocalDensity.uniform(p, 1, p) for p in primes]


def test_legendre_sift() -> None:
    result = legendre_sift(SieveSequence.from_range(1, 30), None, 6)

    assert result.primes == (2, 3, 5)
    assert result.direct == 8
    assert result.inclusion_exclusion == 8
    assert not result.budget_exceeded


def test_legendre_sift_matches_gcd_scan() -> None:
    primorial = math.prod([2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
    coprime = sum(1 for n in range(1, 10**4 + 1) if math.gcd(n, primorial) == 1)

    result = legendre_sift(SieveSequence.from_range(1, 10**4), None, 30)

    assert len(result.primes) == 10
    assert result.inclusion_exclusion == result.direct == coprime


@pytest.mark.parametrize('x', [10**3, 10**4])
def test_classical_remainder_for_small_moduli(x: int) -> None:
    f = Polynomial.from_expression('T**2 + 1', variables=('T',))
    sequence = SieveSequence.from_polynomial(f, x)

    for d in range(1, 101):
        if is_squarefree(d):
            assert classical_remainder(f, d, x, sequence).holds, d


def test_legendre_sift_restricted_primes() -> None:
    result = legendre_sift(SieveSequence.from_range(1, 30), [3, 5], 6)

    assert result.primes == (3, 5)
    assert result.sifted == 16


def test_legendre_sift_over_budget() -> None:
    result = legendre_sift(SieveSequence.from_range(1, 30), None, 6, divisor_budget=4)

    assert result.budget_exceeded
    assert result.direct == 8


def test_empty_prime_range() -> None:
    seq = SieveSequence.from_range(1, 30)

    assert legendre_sift(seq, None, 2).sifted == 30
    assert direct_sift(seq, []) == 30


def test_sift_with_weights_and_zeros() -> None:
    seq = SieveSequence.from_values([0, 7, 10, 11], weights=[5, Fraction(1, 2), 1, Fraction(1, 3)])

    result = legendre_sift(seq, None, 6)

    assert result.direct == Fraction(5, 6)
    assert result.inclusion_exclusion == Fraction(5, 6)


def test_sifted_bracket() -> None:
    bracket = sifted_bracket(SieveSequence.from_range(1, 30), _reciprocal_densities(2, 3, 5), 6, kappa=1.0)

    assert bracket.sifted == 8
    assert bracket.density_product == Fraction(4, 15)
    assert bracket.predicted == 8
    assert bracket.normalized is not None


def test_zero_set_bound() -> None:
    seq = SieveSequence.from_values([0, 1, 2, 3])

    bound = zero_set_bound(seq, _reciprocal_densities(2, 3))

    assert bound is not None
    assert bound.prime == 3
    assert bound.observed == Fraction(1, 4)
    assert bound.holds
    assert zero_set_bound(seq, []) is None
