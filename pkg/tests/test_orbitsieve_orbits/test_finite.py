from pathlib import Path

import numpy as np
import pytest
from orbitsieve_core.exactmath import IntMatrix
from orbitsieve_core.exceptions import InvalidModulusError, NonSquarefreeModulusError
from orbitsieve_orbits import (
    TableFileCache,
    TableInMemoryCache,
    discover_exceptional_primes,
    generate_finite_image,
    get_preset,
    lubotzky,
    reduce_mod,
    strong_approx_check,
)
from orbitsieve_orbits.exceptions import EnumerationCapError


def test_reduce_mod() -> None:
    g = IntMatrix.from_rows([[7, -3], [5, 2]])

    assert reduce_mod(g, 6) == IntMatrix.from_rows([[1, 3], [5, 2]])

    with pytest.raises(NonSquarefreeModulusError):
        reduce_mod(g, 4)

    with pytest.raises(InvalidModulusError):
        reduce_mod(g, 1)


@pytest.mark.parametrize(('d', 'size'), [(2, 6), (3, 1), (5, 120), (6, 6), (7, 336), (10, 720), (11, 1320), (13, 2184)])
def test_lubotzky_images(d: int, size: int) -> None:
    table = generate_finite_image(lubotzky(), d)

    assert table.size == size
    assert table.exceptional == (d % 3 == 0)


def test_table_action_is_a_permutation() -> None:
    table = generate_finite_image(lubotzky(), 5)

    for column in table.action.T:
        assert sorted(column.tolist()) == list(range(table.size))

    a = table.generator_indices()[1]
    assert table.multiply(0, a) == a
    assert table.action[0, 1] == a


def test_enumeration_cap() -> None:
    with pytest.raises(EnumerationCapError) as exc_info:
        generate_finite_image(lubotzky(), 7, cap=100)

    assert exc_info.value.cap == 100


def test_strong_approximation() -> None:
    assert strong_approx_check(lubotzky(), 5).surjective is True
    assert strong_approx_check(lubotzky(), 3).surjective is False
    assert strong_approx_check(lubotzky(), 3).ambient_size == 24
    assert strong_approx_check(get_preset('apollonian'), 2).surjective is None

    report = strong_approx_check(lubotzky(), 10)
    assert report.image_size == report.ambient_size == 720
    assert report.surjective is True


def test_discover_exceptional_primes() -> None:
    scan = discover_exceptional_primes(lubotzky(), 13)

    assert scan.exceptional_primes == (3,)
    assert scan.skipped == ()


def test_sp4_mod_2() -> None:
    report = strong_approx_check(get_preset('sp4z'), 2)

    assert report.image_size == 720
    assert report.surjective


def test_in_memory_cache() -> None:
    cache = TableInMemoryCache()

    first = generate_finite_image(lubotzky(), 5, cache=cache)
    second = generate_finite_image(lubotzky(), 5, cache=cache)

    assert first is second


def test_file_cache(tmp_path: Path) -> None:
    cache = TableFileCache(tmp_path)
    table = generate_finite_image(lubotzky(), 5, cache=cache)

    restored = TableFileCache(tmp_path).get((lubotzky().digest(), 5))

    assert restored is not None
    assert restored.elements == table.elements
    assert np.array_equal(restored.action, table.action)
    assert restored.preset_name == 'lubotzky'
