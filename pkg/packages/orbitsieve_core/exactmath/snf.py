import typing as t
from dataclasses import dataclass

from orbitsieve_core.exactmath.matrix import IntMatrix

_Grid = t.List[t.List[int]]


def _smallest_nonzero(a: _Grid, start: int) -> t.Optional[t.Tuple[int, int]]:
    best: t.Optional[t.Tuple[int, int, int]] = None
    for i in range(start, len(a)):
        for j in range(start, len(a[i])):
            if a[i][j] and (best is None or (abs(a[i][j]), i, j) < best):
                best = (abs(a[i][j]), i, j)

    if best is None:
        return None
    return best[1], best[2]


def _move_to(a: _Grid, source: t.Tuple[int, int], target: int) -> None:
    i, j = source
    a[target], a[i] = a[i], a[target]
    for row in a:
        row[target], row[j] = row[j], row[target]


def _eliminate(a: _Grid, t_: int) -> bool:
    """Reduce row and column ``t_`` modulo the pivot; return True when both are cleared."""
    pivot = a[t_][t_]
    cleared = True
    for i in range(t_ + 1, len(a)):
        q = a[i][t_] // pivot
        if q:
            a[i] = [x - q * y for x, y in zip(a[i], a[t_])]
        cleared = cleared and a[i][t_] == 0

    for j in range(t_ + 1, len(a[t_])):
        q = a[t_][j] // pivot
        if q:
            for row in a:
                row[j] -= q * row[t_]
        cleared = cleared and a[t_][j] == 0

    return cleared


def _first_non_multiple(a: _Grid, t_: int) -> t.Optional[int]:
    pivot = a[t_][t_]
    for i in range(t_ + 1, len(a)):
        if any(x % pivot for x in a[i][t_ + 1 :]):
            return i
    return None


def smith_normal_form(matrix: IntMatrix) -> t.Tuple[int, ...]:
    """Invariant factors ``d1 | d2 | ... | dr`` of an integer matrix.

    The pivot is always the entry of smallest absolute value in the remaining submatrix, ties broken by the
    lowest ``(row, col)``, so the elimination sequence is deterministic. Zero factors come last; the result
    has ``min(rows, cols)`` entries.

    Args:
        matrix: Any integer matrix.

    Returns:
        :obj:`tuple` of :obj:`int`: The diagonal of the Smith normal form.
    """
    n_rows, n_cols = matrix.shape
    size = min(n_rows, n_cols)
    a = [list(row) for row in matrix.rows]

    factors: t.List[int] = []
    for t_ in range(size):
        position = _smallest_nonzero(a, t_)
        if position is None:
            break
        _move_to(a, position, t_)

        while True:
            if not _eliminate(a, t_):
                _move_to(a, _smallest_nonzero(a, t_), t_)  # type: ignore[arg-type]
                continue

            row = _first_non_multiple(a, t_)
            if row is None:
                break
            a[t_] = [x + y for x, y in zip(a[t_], a[row])]

        factors.append(abs(a[t_][t_]))

    return tuple(factors) + (0,) * (size - len(factors))


@dataclass(frozen=True)
class LatticeQuotient:
    """Structure of ``Z^rows / column-lattice(A)``."""

    free_rank: int
    invariant_factors: t.Tuple[int, ...]

    @property
    def torsion(self) -> t.Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    @property
    def torsion_order(self) -> int:
        order = 1
        for d in self.invariant_factors:
            if d:
                order *= d
        return order


def lattice_quotient(matrix: IntMatrix) -> LatticeQuotient:
    factors = smith_normal_form(matrix)
    nonzero = sum(1 for d in factors if d)
    return LatticeQuotient(free_rank=matrix.shape[0] - nonzero, invariant_factors=factors)
