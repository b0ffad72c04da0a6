import typing as t
from fractions import Fraction

import pytest
from orbitsieve_core.exactmath import IntMatrix, Polynomial
from orbitsieve_sieve import (
    LocalDensity,
    SieveSequence,
    large_sieve_mass,
    level_ledger,
    orbit_zero_predicate,
    prime_divisor_concentration,
)
from orbitsieve_sieve.exceptions import DivisorBudgetError


def _reciprocal_densities(*primes: int) -> t.List[LocalDensity]:
    return [LocalDensity.uniform(p, 1, p) for p in primes]


def test_level_ledger() -> None:
    ledger = level_ledger(SieveSequence.from_range(1, 31), _reciprocal_densities(2, 3, 5), 10, rho=0.6)

    assert [r.d for r in ledger.remainders] == [1, 2, 3, 5, 6]
    assert ledger.remainders[1].remainder == Fraction(-1, 2)
    assert ledger.aggregate == Fraction(6, 5)
    assert ledger.max_remainder == Fraction(1, 2)
    assert ledger.delta == 0
    assert ledger.delta_1 == pytest.approx(1.0)
    assert ledger.beta_limit == pytest.approx(0.6 ** (-2 / 3))


def test_level_ledger_exact_periods() -> None:
    ledger = level_ledger(SieveSequence.from_range(1, 30), _reciprocal_densities(2, 3, 5), 31)

    assert ledger.aggregate == 0
    assert ledger.beta_limit is None


def test_level_ledger_budget() -> None:
    with pytest.raises(DivisorBudgetError):
        level_ledger(SieveSequence.from_range(1, 30), _reciprocal_densities(2, 3, 5), 31, divisor_budget=4)


def test_large_sieve_mass() -> None:
    densities = [LocalDensity.uniform(2, 1, 2), LocalDensity.uniform(3, 1, 2)]

    mass = large_sieve_mass(densities, 4)

    assert mass.mass == 3
    assert mass.sifted_upper_bound(Fraction(12)) == 4


def test_large_sieve_mass_full_density() -> None:
    mass = large_sieve_mass([LocalDensity.uniform(2, 2, 2)], 10)

    assert mass.mass is None
    assert mass.full == (2,)
    assert mass.sifted_upper_bound(Fraction(12)) == 0


def test_large_sieve_mass_without_primes() -> None:
    assert large_sieve_mass([], 10).mass == 1


def test_prime_divisor_concentration() -> None:
    f = Polynomial.from_expression('x0*x1', nvars=2)
    predicates = {p: orbit_zero_predicate((1, 2), f, p) for p in (2, 3, 5)}
    densities = [LocalDensity(2, 1, 2, Fraction(1, 2)), LocalDensity(5, 1, 4, Fraction(1, 4))]

    result = prime_divisor_concentration([IntMatrix.identity(2)] * 4, predicates, densities, 6)

    assert result.samples == 4
    assert result.mean_square == pytest.approx(0.0625)
    assert result.expected == pytest.approx(0.4375)
    assert result.standard_error == 0.0


def test_prime_divisor_concentration_empty_range() -> None:
    result = prime_divisor_concentration([IntMatrix.identity(2)], {}, [], 6)

    assert result.mean_square == 0.0
    assert result.ratio is None
