from fractions import Fraction
from pathlib import Path

import pytest
from orbitsieve_apollonian import DescartesQuadruple, enumerate_packing
from orbitsieve_core.exactmath import Polynomial
from orbitsieve_core.exceptions import NonSquarefreeModulusError
from orbitsieve_sieve import SieveSequence, congruence_sum
from orbitsieve_sieve.exceptions import SequenceFileError


def test_from_range() -> None:
    seq = SieveSequence.from_range(1, 30)

    assert len(seq) == 30
    assert seq.total_mass == 30
    assert congruence_sum(seq, 1) == 30
    assert congruence_sum(seq, 6) == 5


def test_zero_set_is_kept_apart() -> None:
    seq = SieveSequence.from_values([0, -4, 6, 0, 9])

    assert seq.zero_mass == 2
    assert seq.total_mass == 3
    assert congruence_sum(seq, 2) == 2
    assert congruence_sum(seq, 3) == 2


def test_weights() -> None:
    seq = SieveSequence.from_values([2, 3, 4], weights=[Fraction(1, 2), 1, Fraction(1, 3)])

    assert seq.total_mass == Fraction(11, 6)
    assert congruence_sum(seq, 2) == Fraction(5, 6)


def test_negative_weight() -> None:
    with pytest.raises(ValueError):
        SieveSequence.from_values([1, 2], weights=[1, -1])


def test_non_squarefree_modulus() -> None:
    with pytest.raises(NonSquarefreeModulusError):
        congruence_sum(SieveSequence.from_range(1, 30), 4)


def test_big_values() -> None:
    seq = SieveSequence.from_values([2**100, 3**70, 2**100 + 1])

    assert congruence_sum(seq, 2) == 1
    assert congruence_sum(seq, 3) == 1


def test_from_integer_file(tmp_path: Path) -> None:
    path = tmp_path / 'values.txt'
    path.write_text('# curvatures\n1 2 3\n\n4  # four\n5\n', encoding='utf-8')

    seq = SieveSequence.from_integer_file(path)

    assert [item.value for item in seq.items] == [1, 2, 3, 4, 5]


def test_from_integer_file_error(tmp_path: Path) -> None:
    path = tmp_path / 'values.txt'
    path.write_text('1 2\nthree\n', encoding='utf-8')

    with pytest.raises(SequenceFileError, match='line 2'):
        SieveSequence.from_integer_file(path)


def test_from_polynomial() -> None:
    seq = SieveSequence.from_polynomial(Polynomial.from_expression('T**2 + 1', variables=('T',)), 5)

    assert [item.value for item in seq.items] == [2, 5, 10, 17, 26]
    assert [item.label for item in seq.items] == [1, 2, 3, 4, 5]


def test_from_packing() -> None:
    packing = enumerate_packing(DescartesQuadruple(-6, 11, 14, 15), 25)

    seq = SieveSequence.from_packing(packing)

    assert sorted(item.value for item in seq.items) == [6, 11, 14, 15, 23]
