from fractions import Fraction

import numpy as np
import pytest
from orbitsieve_core.exactmath import IntMatrix
from orbitsieve_dt3m import degenerate_density, lagrangian_degenerate, omega_density_exact, uniform_symplectic
from orbitsieve_dt3m.exceptions import InvalidGenusError
from orbitsieve_orbits.presets import standard_symplectic_form


def test_lagrangian_degenerate() -> None:
    assert lagrangian_degenerate(IntMatrix.from_rows([[1, 0], [5, 1]]), 5)
    assert not lagrangian_degenerate(IntMatrix.from_rows([[1, 0], [5, 1]]), 2)
    assert lagrangian_degenerate(IntMatrix.identity(4), 7)


@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_genus_one_density(p: int) -> None:
    density = omega_density_exact(1, p)

    assert density.exact
    assert density.density == Fraction(1, p + 1) == density.closed_form


def test_genus_two_density_mod_2() -> None:
    density = omega_density_exact(2, 2)

    assert density.exact
    assert density.group_size == 720
    assert density.density == Fraction(7, 15)
    assert density.closed_form == density.density


@pytest.mark.slow
def test_genus_two_density_mod_3() -> None:
    density = omega_density_exact(2, 3)

    assert density.group_size == 51840
    assert density.density == Fraction(13, 40)


def test_monte_carlo_fallback() -> None:
    density = omega_density_exact(2, 5, cap=1000, samples=2000, seed=0)

    assert not density.exact
    assert density.group_size == 2000
    assert density.interval is not None
    assert density.interval[0] <= float(density.density) <= density.interval[1]
    assert abs(float(density.density) - 31 / 156) < 0.05


def test_monte_carlo_is_seeded() -> None:
    first = omega_density_exact(1, 11, cap=10, samples=500, seed=4)
    second = omega_density_exact(1, 11, cap=10, samples=500, seed=4)

    assert first == second


@pytest.mark.parametrize(('g', 'p'), [(1, 5), (2, 7), (3, 3)])
def test_uniform_symplectic_preserves_the_form(g: int, p: int) -> None:
    rng = np.random.Generator(np.random.Philox(0))
    omega = standard_symplectic_form(g)

    gamma = uniform_symplectic(g, p, rng)

    assert (gamma.transpose() @ omega @ gamma).reduce(p) == omega.reduce(p)


def test_unsupported_genus() -> None:
    with pytest.raises(InvalidGenusError):
        omega_density_exact(3, 2)


@pytest.mark.parametrize(
    ('g', 'p', 'expected'),
    [
        (1, 2, Fraction(1, 3)),
        (2, 2, Fraction(7, 15)),
        (2, 3, Fraction(13, 40)),
        (2, 5, Fraction(31, 156)),
    ],
)
def test_degenerate_density(g: int, p: int, expected: Fraction) -> None:
    assert degenerate_density(g, p) == expected
