import math

import pytest
from orbitsieve_core.exactmath import FactorizationEffort, factorize, omega
from orbitsieve_core.exceptions import FactorizationEffortError, FactorizationError


def test_factorize_small() -> None:
    factorization = factorize(360)

    assert factorization.complete
    assert factorization.factors == ((2, 3), (3, 2), (5, 1))
    assert factorization.omega == 6
    assert factorization.value() == 360


def test_factorize_negative() -> None:
    factorization = factorize(-12)

    assert factorization.sign == -1
    assert factorization.primes == (2, 3)
    assert factorization.value() == -12


def test_factorize_one() -> None:
    factorization = factorize(1)

    assert factorization.complete
    assert factorization.factors == ()
    assert factorization.omega == 0


def test_factorize_semiprime_above_trial_bound() -> None:
    p, q = 10**9 + 7, 10**9 + 9

    factorization = factorize(p * q * 4)

    assert factorization.complete
    assert factorization.factors == ((2, 2), (p, 1), (q, 1))


def test_factorize_respects_bit_bound() -> None:
    n = 1009 * 1013
    effort = FactorizationEffort(trial_bound=100, max_bits=16)

    factorization = factorize(n, effort)

    assert not factorization.complete
    assert factorization.cofactor == n
    assert factorization.omega == 0
    assert factorization.omega_lower_bound == 2


def test_factorize_zero() -> None:
    with pytest.raises(FactorizationError):
        factorize(0)


def test_omega() -> None:
    assert omega(0) == math.inf
    assert omega(1) == 0
    assert omega(2**10 * 3) == 11
    assert omega(-30) == 3


def test_omega_unfactored() -> None:
    effort = FactorizationEffort(trial_bound=100, max_bits=16)

    with pytest.raises(FactorizationEffortError) as exc_info:
        omega(2 * 1009 * 1013, effort)

    assert exc_info.value.partial.factors == ((2, 1),)
