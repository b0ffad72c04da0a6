import typing as t
from dataclasses import dataclass

from orbitsieve_apollonian.exceptions import DescentLimitError, InvalidQuadrupleError, InvalidReflectionIndexError

_DEFAULT_DESCENT_LIMIT = 100_000

Quadruple = t.Tuple[int, int, int, int]


def descartes_form(curvatures: t.Sequence[int]) -> int:
    """Descartes quadratic form ``2(x² + y² + z² + t²) − (x + y + z + t)²``.

    Args:
        curvatures: Any four integers.

    Returns:
        :obj:`int`: Exact value of the form; ``0`` for curvatures of four mutually tangent circles.
    """
    if len(curvatures) != 4:
        raise InvalidQuadrupleError(f'Expected four curvatures, got {len(curvatures)}')

    return 2 * sum(c * c for c in curvatures) - sum(curvatures) ** 2


@dataclass(frozen=True)
class DescartesQuadruple:
    """Curvatures of four mutually tangent circles.

    Negative curvature marks the bounding circle, zero a straight line.
    """

    c1: int
    c2: int
    c3: int
    c4: int

    def __post_init__(self) -> None:
        value = descartes_form(self.as_tuple())
        if value != 0:
            raise InvalidQuadrupleError(f'{self.as_tuple()} is not a Descartes quadruple (form value {value})')

    @classmethod
    def from_sequence(cls, curvatures: t.Sequence[int]) -> 'DescartesQuadruple':
        if len(curvatures) != 4:
            raise InvalidQuadrupleError(f'Expected four curvatures, got {len(curvatures)}')
        return cls(*(int(c) for c in curvatures))

    def as_tuple(self) -> Quadruple:
        return self.c1, self.c2, self.c3, self.c4

    def key(self) -> Quadruple:
        """Sorted curvatures; two quadruples describe the same circles iff their keys are equal."""
        a, b, c, d = sorted(self.as_tuple())
        return a, b, c, d

    def sorted(self) -> 'DescartesQuadruple':
        return DescartesQuadruple(*self.key())

    @property
    def total(self) -> int:
        return sum(self.as_tuple())

    def __str__(self) -> str:
        return f'({self.c1}, {self.c2}, {self.c3}, {self.c4})'


def _other_root(curvatures: Quadruple, index: int) -> int:
    return 2 * (sum(curvatures) - curvatures[index]) - curvatures[index]


def _replace(curvatures: Quadruple, index: int, value: int) -> Quadruple:
    items = list(curvatures)
    items[index] = value
    return items[0], items[1], items[2], items[3]


def reflect(quadruple: DescartesQuadruple, i: int) -> DescartesQuadruple:
    """Apply the reflection ``s_i``.

    Coordinate ``i`` (1-based) is replaced by the other root of the form, ``2·(sum of the other three) − c_i``.
    Reflections are involutions.

    Args:
        quadruple: Descartes quadruple.
        i: Reflection index, ``1..4``.

    Returns:
        :obj:`DescartesQuadruple`: Reflected quadruple.
    """
    if i not in (1, 2, 3, 4):
        raise InvalidReflectionIndexError(f'Reflection index must be in 1..4, got {i}')

    curvatures = quadruple.as_tuple()
    return DescartesQuadruple(*_replace(curvatures, i - 1, _other_root(curvatures, i - 1)))


def reduce_to_root(quadruple: DescartesQuadruple, max_steps: int = _DEFAULT_DESCENT_LIMIT) -> DescartesQuadruple:
    """Descend to the root quadruple of the packing containing ``quadruple``.

    Applies the first reflection (in index order) that strictly decreases the curvature sum until none does.

    Returns:
        :obj:`DescartesQuadruple`: Sorted sum-minimal quadruple.

    Raises:
        :obj:`DescentLimitError`: The descent did not stop within ``max_steps`` reflections.
    """
    curvatures = quadruple.as_tuple()
    for _ in range(max_steps):
        for index in range(4):
            value = _other_root(curvatures, index)
            if value < curvatures[index]:
                curvatures = _replace(curvatures, index, value)
                break
        else:
            return DescartesQuadruple(*curvatures).sorted()

    raise DescentLimitError(f'No root quadruple reached from {quadruple} after {max_steps} reflections')
