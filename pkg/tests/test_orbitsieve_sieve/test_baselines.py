import pytest
from orbitsieve_sieve import almost_prime_counts, hardy_ramanujan_variance, omega_table, prime_count_check


def test_omega_table() -> None:
    assert omega_table(12).tolist() == [0, 0, 1, 1, 2, 1, 2, 1, 3, 2, 2, 1, 3]


def test_almost_prime_counts() -> None:
    counts = almost_prime_counts(30, 3)

    assert [c.count for c in counts] == [10, 10, 7]
    assert [c.k for c in counts] == [1, 2, 3]


def test_prime_count_check() -> None:
    check = prime_count_check(10**5)

    assert check.count == 9592
    assert check.relative_error == pytest.approx(0.0945, abs=1e-3)


def test_hardy_ramanujan_variance() -> None:
    check = hardy_ramanujan_variance(10**5)

    assert 0.5 < check.ratio < 3


def test_hardy_ramanujan_needs_large_x() -> None:
    with pytest.raises(ValueError):
        hardy_ramanujan_variance(10)
