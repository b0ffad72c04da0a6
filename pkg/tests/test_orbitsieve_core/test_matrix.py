import pytest
from orbitsieve_core.exactmath import IntMatrix, rank_mod_p
from orbitsieve_core.exceptions import DimensionMismatchError


def test_determinant() -> None:
    assert IntMatrix.from_rows([[2, 1], [1, 1]]).determinant() == 1
    assert IntMatrix.from_rows([[0, 1], [1, 0]]).determinant() == -1
    assert IntMatrix.from_rows([[2, 0, 1], [1, 3, 2], [1, 1, 2]]).determinant() == 6
    assert IntMatrix.from_rows([[1, 2], [2, 4]]).determinant() == 0


def test_determinant_big_entries() -> None:
    big = 10**40
    matrix = IntMatrix.from_rows([[big + 1, big], [1, 1]])

    assert matrix.determinant() == 1


def test_matmul_and_apply() -> None:
    a = IntMatrix.from_rows([[1, 3], [0, 1]])
    b = IntMatrix.from_rows([[1, 0], [3, 1]])

    assert a @ b == IntMatrix.from_rows([[10, 3], [3, 1]])
    assert a.apply((1, 2)) == (7, 2)
    assert (a @ b).reduce(3) == IntMatrix.identity(2)


def test_matmul_dimension_mismatch() -> None:
    with pytest.raises(DimensionMismatchError):
        _ = IntMatrix.identity(2) @ IntMatrix.identity(3)


def test_ragged_rows() -> None:
    with pytest.raises(DimensionMismatchError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_from_columns() -> None:
    matrix = IntMatrix.from_columns([(1, 0), (1, 5)])

    assert matrix == IntMatrix.from_rows([[1, 1], [0, 5]])
    assert matrix.column(1) == (1, 5)


def test_rank_mod_p() -> None:
    matrix = IntMatrix.from_rows([[1, 1], [0, 5]])

    assert rank_mod_p(matrix, 5) == 1
    assert rank_mod_p(matrix, 2) == 2
    assert rank_mod_p(IntMatrix.zeros(3, 3), 7) == 0
