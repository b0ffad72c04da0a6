import random

import pytest
from orbitsieve_apollonian import DescartesQuadruple, descartes_form, reduce_to_root, reflect
from orbitsieve_apollonian.exceptions import InvalidQuadrupleError, InvalidReflectionIndexError

_ROOT = DescartesQuadruple(-6, 11, 14, 15)


def test_descartes_form() -> None:
    assert descartes_form((0, 0, 0, 0)) == 0
    assert descartes_form((-6, 11, 14, 15)) == 0
    assert descartes_form((-1, 2, 2, 3)) == 0
    assert descartes_form((1, 1, 1, 1)) == -8


def test_invalid_quadruple() -> None:
    with pytest.raises(InvalidQuadrupleError):
        DescartesQuadruple(1, 1, 1, 1)

    with pytest.raises(InvalidQuadrupleError):
        DescartesQuadruple.from_sequence([1, 2, 3])


def test_reflect() -> None:
    assert reflect(_ROOT, 1).as_tuple() == (86, 11, 14, 15)
    assert reflect(_ROOT, 4).as_tuple() == (-6, 11, 14, 23)


@pytest.mark.parametrize('i', [1, 2, 3, 4])
def test_reflect_is_involution(i: int) -> None:
    assert reflect(reflect(_ROOT, i), i) == _ROOT


def test_reflect_bad_index() -> None:
    with pytest.raises(InvalidReflectionIndexError):
        reflect(_ROOT, 0)


def test_random_reflection_words_stay_on_the_cone() -> None:
    rng = random.Random(7)
    for _ in range(100):
        quadruple = _ROOT
        for _ in range(100):
            quadruple = reflect(quadruple, rng.randint(1, 4))
            assert descartes_form(quadruple.as_tuple()) == 0


def test_reduce_to_root() -> None:
    assert reduce_to_root(DescartesQuadruple(-6, 11, 14, 23)) == _ROOT
    assert reduce_to_root(_ROOT) == _ROOT
    assert reduce_to_root(DescartesQuadruple(0, 0, 1, 1)) == DescartesQuadruple(0, 0, 1, 1)


def test_reduce_deep_descendant() -> None:
    quadruple = _ROOT
    for i in (1, 2, 3, 4, 1, 2):
        quadruple = reflect(quadruple, i)

    assert reduce_to_root(quadruple) == _ROOT
