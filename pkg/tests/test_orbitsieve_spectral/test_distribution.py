from fractions import Fraction

import pytest
from orbitsieve_core.exactmath import IntMatrix
from orbitsieve_orbits import generate_finite_image, lubotzky
from orbitsieve_spectral import (
    cayley_graph,
    equidistribution_error,
    exact_walk_distribution,
    mean_zero_spectral_radius,
    spectral_row,
    spectral_table,
    triple_product_growth,
    uniform_rho,
)
from orbitsieve_spectral.exceptions import NotGeneratingError


def test_exact_walk_distribution() -> None:
    graph = cayley_graph(generate_finite_image(lubotzky(), 2))

    counts = exact_walk_distribution(graph, 3)

    assert sum(counts) == 5**3


def test_equidistribution_one_step() -> None:
    result = equidistribution_error(lubotzky(), 2, 1)

    assert result.max_error == Fraction(7, 30)
    assert result.holds


@pytest.mark.parametrize('steps', [0, 2, 5, 10])
def test_equidistribution_bound_holds(steps: int) -> None:
    result = equidistribution_error(lubotzky(), 5, steps)

    assert result.holds
    assert result.size == 120


def test_equidistribution_error_decays() -> None:
    errors = [equidistribution_error(lubotzky(), 5, k).max_error for k in (2, 6, 12)]

    assert errors[0] > errors[1] > errors[2]


@pytest.mark.parametrize('d', [2, 5, 7, 10])
def test_equidistribution_bound_up_to_forty_steps(d: int) -> None:
    table = generate_finite_image(lubotzky(), d)
    report = mean_zero_spectral_radius(cayley_graph(table))

    for steps in (1, 10, 20, 40):
        assert equidistribution_error(lubotzky(), d, steps, table=table, report=report).holds


@pytest.mark.slow
def test_equidistribution_bound_mod_35() -> None:
    table = generate_finite_image(lubotzky(), 35)
    report = mean_zero_spectral_radius(cayley_graph(table))

    assert table.size == 120 * 336
    for steps in (5, 20, 40):
        assert equidistribution_error(lubotzky(), 35, steps, table=table, report=report).holds


def test_equidistribution_mod_5_after_twenty_steps() -> None:
    result = equidistribution_error(lubotzky(), 5, 20)

    # the sup norm is at most the l2 norm, which contracts by rho0 per step
    assert float(result.max_error) <= result.rho0**20 + 1e-12
    assert result.max_error < equidistribution_error(lubotzky(), 5, 10).max_error


def test_triple_product_growth() -> None:
    table = generate_finite_image(lubotzky(), 2)
    a = IntMatrix.from_rows([[1, 1], [0, 1]])
    b = IntMatrix.from_rows([[1, 0], [1, 1]])

    growth = triple_product_growth(table, [a, b])

    assert growth.size == 2
    assert growth.triple_size == 3


def test_triple_product_needs_generating_set() -> None:
    table = generate_finite_image(lubotzky(), 2)

    with pytest.raises(NotGeneratingError) as exc_info:
        triple_product_growth(table, [IntMatrix.from_rows([[1, 1], [0, 1]])])

    assert len(exc_info.value.subgroup) == 2


def test_spectral_rows() -> None:
    rows = spectral_table(lubotzky(), [2, 3])

    assert [row.size for row in rows] == [6, 1]
    assert uniform_rho(rows) == pytest.approx(0.6)
    assert uniform_rho(rows[1:]) is None


def test_spectral_row_mod_6() -> None:
    row = spectral_row(lubotzky(), 6)

    assert row.size == 6
    assert row.rho0 == pytest.approx(0.6)
    assert row.converged
