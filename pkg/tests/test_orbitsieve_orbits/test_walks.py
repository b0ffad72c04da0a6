import itertools
from fractions import Fraction
from pathlib import Path

import pytest
from orbitsieve_core.exactmath import IntMatrix, Polynomial
from orbitsieve_orbits import (
    WalkEnsemble,
    combinatorial_ball,
    exact_walk_masses,
    generate_finite_image,
    lubotzky,
    measure_growth_rate,
    norm_ball,
    orbit_value,
    read_walk_snapshot,
    reduced_walk_indices,
    sample_walk,
    sl2z,
    write_walk_snapshot,
)
from orbitsieve_orbits.exceptions import WalkSnapshotError


def test_combinatorial_ball_sizes() -> None:
    assert combinatorial_ball(lubotzky(), 1).size == 5
    assert combinatorial_ball(lubotzky(), 2).size == 17
    assert combinatorial_ball(lubotzky(), 3).sphere_sizes == (1, 4, 12, 36)


def test_norm_ball() -> None:
    ball = norm_ball(lubotzky(), 3, max_length=2)

    assert IntMatrix.identity(2) in ball.elements
    assert IntMatrix.from_rows([[1, 3], [0, 1]]) in ball.elements
    assert ball.size == 5
    assert not ball.complete


@pytest.mark.slow
def test_norm_ball_matches_exhaustive_scan() -> None:
    entries = range(-3, 4)
    scan = {
        IntMatrix.from_rows([[a, b], [c, d]])
        for a, b, c, d in itertools.product(entries, repeat=4)
        if a * d - b * c == 1
    }

    ball = norm_ball(sl2z(), 3, max_length=12)

    assert ball.elements == scan


def test_exact_walk_masses() -> None:
    masses = exact_walk_masses(lubotzky(), 2)

    assert sum(masses.values()) == 1
    assert len(masses) == 17
    assert masses[IntMatrix.identity(2)] == Fraction(1, 5)


def test_sample_walk_is_reproducible() -> None:
    first = sample_walk(lubotzky(), 10, 20, seed=42)
    second = sample_walk(lubotzky(), 10, 20, seed=42, chunk_size=3)

    assert first.samples == second.samples
    assert first.complete
    assert sample_walk(lubotzky(), 10, 20, seed=43).samples != first.samples


def test_sample_walk_workers() -> None:
    inline = sample_walk(lubotzky(), 8, 12, seed=1, chunk_size=4)
    parallel = sample_walk(lubotzky(), 8, 12, seed=1, chunk_size=4, workers=2)

    assert inline.samples == parallel.samples


def test_sample_walk_resume() -> None:
    partial = []

    full = sample_walk(lubotzky(), 6, 10, seed=3, chunk_size=4, checkpoint=partial.append)
    resumed = sample_walk(lubotzky(), 6, 10, seed=3, chunk_size=4, resume=partial[0])

    assert len(partial[0].samples) == 4
    assert resumed.samples == full.samples


def test_sample_walk_rejects_foreign_resume() -> None:
    ensemble = sample_walk(lubotzky(), 6, 10, seed=3)

    with pytest.raises(WalkSnapshotError):
        sample_walk(lubotzky(), 6, 10, seed=4, resume=ensemble)


def test_walk_samples_stay_in_the_image() -> None:
    ensemble = sample_walk(lubotzky(), 12, 50, seed=0)
    table = generate_finite_image(lubotzky(), 3)

    assert reduced_walk_indices(ensemble, table) == [0] * 50


def test_walk_snapshot(tmp_path: Path) -> None:
    ensemble = sample_walk(lubotzky(), 30, 5, seed=9)
    path = tmp_path / 'walks.json'

    write_walk_snapshot(ensemble, path)

    assert read_walk_snapshot(path, lubotzky()).samples == ensemble.samples
    with pytest.raises(WalkSnapshotError):
        read_walk_snapshot(path, sl2z())


def test_orbit_value() -> None:
    f = Polynomial.from_expression('x0*x1', nvars=2)
    g = IntMatrix.from_rows([[1, 3], [0, 1]])

    assert orbit_value(g, (1, 2), f) == 14


def test_measure_growth_rate() -> None:
    ensemble = sample_walk(lubotzky(), 20, 50, seed=0)
    f = Polynomial.from_expression('x0*x1', nvars=2)

    growth = measure_growth_rate(ensemble, (1, 2), f)

    assert growth.used + growth.zeros == 50
    assert growth.rate is not None
    assert growth.rate > 1


def test_growth_rate_of_empty_walk() -> None:
    ensemble = WalkEnsemble(lubotzky(), 0, 1, 0, (IntMatrix.identity(2),))

    assert measure_growth_rate(ensemble, (1, 2), Polynomial.coordinate_product(2)).rate is None
