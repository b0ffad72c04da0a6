import pytest
from orbitsieve_core.exactmath import IntMatrix
from orbitsieve_dt3m import HomologyRow, HomologyStatistics, homology_statistics, infinite_fraction_rate, sifting_rate
from orbitsieve_orbits import WalkEnsemble, get_preset, sample_walk


def _statistics(steps: int, infinite: int, sifted: int, size: int = 4) -> HomologyStatistics:
    rows = tuple(
        HomologyRow(
            index=i,
            steps=steps,
            finite=i >= infinite,
            torsion_order=1,
            omega=0,
            small_primes=0 if i < sifted else 1,
        )
        for i in range(size)
    )
    return HomologyStatistics(steps=steps, z=10, rows=rows)


def test_identity_samples() -> None:
    ensemble = WalkEnsemble(get_preset('sp4z'), 0, 2, 0, (IntMatrix.identity(4),) * 2)

    statistics = homology_statistics(ensemble, 10)

    assert statistics.infinite_fraction == 1.0
    assert statistics.sifted_fraction == 0.0
    assert [row.small_primes for row in statistics.rows] == [4, 4]
    assert all(row.omega is None for row in statistics.rows)


def test_walk_samples() -> None:
    ensemble = sample_walk(get_preset('sp4z'), 10, 30, seed=0)

    statistics = homology_statistics(ensemble, 10)

    assert [row.index for row in statistics.rows] == list(range(30))
    assert 0.0 <= statistics.infinite_fraction <= 1.0
    for row in statistics.rows:
        assert row.finite == (row.torsion_order > 0)


def test_workers_keep_sample_order() -> None:
    ensemble = sample_walk(get_preset('sp2z'), 6, 20, seed=2)

    inline = homology_statistics(ensemble, 10)
    parallel = homology_statistics(ensemble, 10, workers=2)

    assert inline == parallel


def test_fitted_rates() -> None:
    grid = [_statistics(1, infinite=2, sifted=4), _statistics(2, infinite=1, sifted=2)]

    assert infinite_fraction_rate(grid) == pytest.approx(0.5)
    assert sifting_rate(grid) == pytest.approx(0.5)
    assert infinite_fraction_rate(grid[:1]) is None
