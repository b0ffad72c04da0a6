import typing as t
from dataclasses import dataclass

from orbitsieve_core.exceptions import DimensionMismatchError

Rows = t.Tuple[t.Tuple[int, ...], ...]


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix with exact (arbitrary precision) entries.

    Instances are immutable and hashable, so they can be used as set members and dictionary keys.
    """

    rows: Rows

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise DimensionMismatchError(f'Ragged matrix rows: {sorted(widths)}')

    @classmethod
    def from_rows(cls, rows: t.Iterable[t.Iterable[int]]) -> 'IntMatrix':
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls(tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def from_columns(cls, columns: t.Sequence[t.Sequence[int]]) -> 'IntMatrix':
        return cls(tuple(zip(*columns))) if columns else cls(())

    @property
    def shape(self) -> t.Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        n, m = self.shape
        return n == m

    def column(self, j: int) -> t.Tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise DimensionMismatchError(f'Cannot multiply {n}x{k} by {k2}x{m}')

        columns = other.transpose().rows
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in columns) for row in self.rows))

    def __neg__(self) -> 'IntMatrix':
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.rows))

    def apply(self, vector: t.Sequence[int]) -> t.Tuple[int, ...]:
        """Return ``self · vector`` for a column vector."""
        if self.shape[1] != len(vector):
            raise DimensionMismatchError(f'Cannot apply a {self.shape} matrix to a vector of length {len(vector)}')
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.rows)

    def reduce(self, d: int) -> 'IntMatrix':
        """Entrywise reduction into ``[0, d)``."""
        return IntMatrix(tuple(tuple(x % d for x in row) for row in self.rows))

    def flat(self) -> t.Tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def max_abs_entry(self) -> int:
        return max((abs(x) for row in self.rows for x in row), default=0)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise DimensionMismatchError(f'Determinant of a non-square {self.shape} matrix')

        n = self.shape[0]
        if n == 0:
            return 1

        a = [list(row) for row in self.rows]
        sign, previous = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot is None:
                    return 0
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign

            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]

        return sign * a[n - 1][n - 1]

    def __str__(self) -> str:
        return '[' + ', '.join('[' + ', '.join(str(x) for x in row) + ']' for row in self.rows) + ']'


def rank_mod_p(matrix: IntMatrix, p: int) -> int:
    """Rank of ``matrix`` over the field with ``p`` elements (``p`` prime)."""
    a = [[x % p for x in row] for row in matrix.rows]
    n_rows, n_cols = matrix.shape
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if a[i][col]), None)
        if pivot is None:
            continue

        a[rank], a[pivot] = a[pivot], a[rank]
        inverse = pow(a[rank][col], -1, p)
        a[rank] = [x * inverse % p for x in a[rank]]
        for i in range(n_rows):
            if i != rank and a[i][col]:
                factor = a[i][col]
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1

    return rank
