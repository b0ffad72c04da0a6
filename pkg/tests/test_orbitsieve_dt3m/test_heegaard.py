import random
import typing as t

import pytest
from orbitsieve_core.exactmath import IntMatrix
from orbitsieve_dt3m import HeegaardDatum, homology_group, homology_mod_p, torsion_size_bound
from orbitsieve_orbits import sp4z
from orbitsieve_dt3m.exceptions import InvalidGenusError, NonSymplecticError


def _datum(rows: t.List[t.List[int]]) -> HeegaardDatum:
    return HeegaardDatum.from_matrix(IntMatrix.from_rows(rows))


def test_lens_space_homology() -> None:
    datum = _datum([[1, 0], [5, 1]])

    result = homology_group(datum)

    assert result.finite
    assert result.order == 5
    assert result.torsion == (5,)
    assert result.dimension_mod(5) == 1
    assert result.dimension_mod(2) == 0


def test_homology_mod_p_matches_invariant_factors() -> None:
    datum = _datum([[1, 0], [5, 1]])

    assert homology_mod_p(datum, 5) == 1
    assert homology_mod_p(datum, 2) == 0


def test_homology_mod_p_on_random_words() -> None:
    rng = random.Random(11)
    generators = sp4z().generators

    for _ in range(1000):
        g = IntMatrix.identity(4)
        for _ in range(rng.randint(0, 25)):
            g = g @ rng.choice(generators)

        datum = HeegaardDatum.from_matrix(g)
        result = homology_group(datum)
        for p in (2, 3, 5):
            assert homology_mod_p(datum, p) == result.dimension_mod(p)


def test_sphere() -> None:
    result = homology_group(_datum([[0, -1], [1, 0]]))

    assert result.finite
    assert result.order == 1
    assert result.torsion == ()


def test_infinite_homology() -> None:
    datum = HeegaardDatum(2, IntMatrix.identity(4))

    result = homology_group(datum)

    assert not result.finite
    assert result.free_rank == 2
    assert result.order == 0
    assert homology_mod_p(datum, 3) == 2
    assert torsion_size_bound(datum, result).log_order is None


def test_torsion_size_bound() -> None:
    bound = torsion_size_bound(_datum([[1, 0], [5, 1]]))

    assert bound.holds
    assert bound.bound > bound.log_order


def test_lagrangian_matrix() -> None:
    datum = _datum([[2, 1], [1, 1]])

    assert datum.lagrangian_matrix() == IntMatrix.from_rows([[1, 2], [0, 1]])


def test_non_symplectic() -> None:
    with pytest.raises(NonSymplecticError):
        _datum([[2, 0], [0, 1]])

    with pytest.raises(NonSymplecticError):
        HeegaardDatum(2, IntMatrix.identity(2))

    with pytest.raises(NonSymplecticError):
        HeegaardDatum.from_matrix(IntMatrix.identity(3))


def test_invalid_genus() -> None:
    with pytest.raises(InvalidGenusError):
        HeegaardDatum(0, IntMatrix.zeros(0, 0))
