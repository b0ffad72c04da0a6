import numpy as np
import pytest
from orbitsieve_orbits import GroupPreset, generate_finite_image, lubotzky
from orbitsieve_spectral import (
    CayleyGraph,
    cayley_graph,
    girth_lower_bound,
    graph_diameter,
    markov_apply,
    markov_matrix,
    mean_zero_spectral_radius,
)


def _graph(d: int) -> CayleyGraph:
    return cayley_graph(generate_finite_image(lubotzky(), d))


def test_markov_matrix_is_stochastic() -> None:
    matrix = markov_matrix(_graph(5)).toarray()

    assert np.allclose(matrix.sum(axis=1), 1.0)
    assert np.allclose(matrix, matrix.T)


def test_markov_apply_preserves_constants() -> None:
    graph = _graph(5)

    assert np.allclose(markov_apply(graph, np.ones(graph.size)), 1.0)


def test_spectral_radius_mod_2() -> None:
    report = mean_zero_spectral_radius(_graph(2))

    assert report.size == 6
    assert report.method == 'dense'
    assert report.rho0 == pytest.approx(0.6)
    assert report.lambda_2 == pytest.approx(0.6)
    assert report.lambda_min == pytest.approx(-0.6)


def test_power_method_agrees() -> None:
    report = mean_zero_spectral_radius(_graph(2), method='power')

    assert report.converged
    assert report.rho0 == pytest.approx(0.6, abs=1e-6)


def test_lanczos_agrees_with_dense() -> None:
    graph = _graph(5)

    dense = mean_zero_spectral_radius(graph, method='dense')
    lanczos = mean_zero_spectral_radius(graph, method='lanczos')

    assert lanczos.rho0 == pytest.approx(dense.rho0, abs=1e-6)
    assert 0 < dense.rho0 < 1


def test_trivial_image() -> None:
    graph = _graph(3)
    report = mean_zero_spectral_radius(graph)

    assert report.size == 1
    assert report.rho0 == 0.0
    assert graph_diameter(graph) == 0
    assert girth_lower_bound(graph) is None


def test_diameter_and_girth_mod_2() -> None:
    graph = _graph(2)

    # the Cayley graph of SL2(F_2) with these generators is a hexagon
    assert graph_diameter(graph) == 3
    assert girth_lower_bound(graph) == 5


def test_lower_spectral_edge() -> None:
    assert _graph(5).lower_spectral_edge == pytest.approx(-0.6)


@pytest.mark.parametrize('p', [2, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_spectral_gap_at_good_primes(p: int) -> None:
    graph = _graph(p)
    report = mean_zero_spectral_radius(graph)

    assert report.rho0 < 1
    assert report.lambda_2 is not None and report.lambda_min is not None
    assert report.lambda_2 <= 1 + 1e-12
    assert report.lambda_min >= graph.lower_spectral_edge - 1e-9


def test_solvers_agree() -> None:
    graph = _graph(13)

    dense = mean_zero_spectral_radius(graph, method='dense')
    lanczos = mean_zero_spectral_radius(graph, method='lanczos')
    power = mean_zero_spectral_radius(graph, method='power')

    assert lanczos.rho0 == pytest.approx(dense.rho0, abs=1e-8)
    assert power.rho0 == pytest.approx(dense.rho0, abs=1e-8)
    assert power.lambda_2 is None and power.lambda_min is None


def test_lanczos_with_one_signed_spectrum() -> None:
    preset = lubotzky()
    # a heavy identity step pushes every mean-zero eigenvalue above zero
    lazy = GroupPreset('lazy', preset.ambient, preset.generators, weights=(5, 1, 1, 1, 1))
    graph = cayley_graph(generate_finite_image(lazy, 5))

    dense = mean_zero_spectral_radius(graph, method='dense')
    lanczos = mean_zero_spectral_radius(graph, method='lanczos')

    assert dense.lambda_min > 0
    assert lanczos.lambda_min == pytest.approx(dense.lambda_min, abs=1e-8)
    assert lanczos.lambda_2 == pytest.approx(dense.lambda_2, abs=1e-8)
