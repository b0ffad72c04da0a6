import logging
import typing as t
from dataclasses import dataclass

from orbitsieve_core.exactmath import IntMatrix

from orbitsieve_orbits.exceptions import EnumerationCapError

if t.TYPE_CHECKING:
    from orbitsieve_orbits.presets import GroupPreset

_logger = logging.getLogger(__name__)

_DEFAULT_BALL_CAP = 2_000_000


@dataclass(frozen=True)
class CombinatorialBall:
    """Elements of word length at most ``radius`` with their word lengths."""

    radius: int
    lengths: t.Dict[IntMatrix, int]

    @property
    def size(self) -> int:
        return len(self.lengths)

    @property
    def sphere_sizes(self) -> t.Tuple[int, ...]:
        sizes = [0] * (self.radius + 1)
        for length in self.lengths.values():
            sizes[length] += 1
        return tuple(sizes)

    @property
    def elements(self) -> t.FrozenSet[IntMatrix]:
        return frozenset(self.lengths)


def combinatorial_ball(preset: 'GroupPreset', radius: int, cap: int = _DEFAULT_BALL_CAP) -> CombinatorialBall:
    """Exact ball of the word metric defined by the generators, by breadth-first search.

    Raises:
        :obj:`EnumerationCapError`: The ball has more than ``cap`` elements.
    """
    identity = IntMatrix.identity(preset.degree)
    steps = [g for g in dict.fromkeys(preset.generators) if g != identity]

    lengths = {identity: 0}
    sphere = [identity]
    for length in range(1, radius + 1):
        next_sphere = []
        for element in sphere:
            for generator in steps:
                product = element @ generator
                if product in lengths:
                    continue
                lengths[product] = length
                next_sphere.append(product)
                if len(lengths) > cap:
                    raise EnumerationCapError(f'Ball of radius {radius} exceeds {cap} elements', cap, len(lengths))

        _logger.debug('Sphere of radius %d has %d elements', length, len(next_sphere))
        sphere = next_sphere

    return CombinatorialBall(radius=radius, lengths=lengths)


@dataclass(frozen=True)
class NormBall:
    """Elements of word length at most ``max_length`` with max-entry norm at most ``bound``.

    ``complete`` is ``True`` only when a certified growth bound shows that no longer word lies in the ball.
    """

    bound: int
    max_length: int
    elements: t.FrozenSet[IntMatrix]
    complete: bool

    @property
    def size(self) -> int:
        return len(self.elements)


def norm_ball(
    preset: 'GroupPreset',
    bound: int,
    max_length: int,
    certified_length: t.Optional[int] = None,
    cap: int = _DEFAULT_BALL_CAP,
) -> NormBall:
    """Best-effort archimedean ball ``{γ : max|γ_ij| <= bound}``.

    Args:
        preset: Group preset.
        bound: Norm bound ``X >= 1``.
        max_length: Word-length cutoff.
        certified_length: A word length ``L`` such that, by an argument the caller vouches for, every element
            of word length at least ``L`` has norm above ``bound``.
        cap: Enumeration cap of the underlying combinatorial ball.

    Returns:
        :obj:`NormBall`: Elements found, flagged complete when ``certified_length <= max_length + 1``.
    """
    if bound < 1:
        raise ValueError(f'Norm bound must be at least 1, got {bound}')

    ball = combinatorial_ball(preset, max_length, cap)
    elements = frozenset(g for g in ball.lengths if g.max_abs_entry() <= bound)
    complete = certified_length is not None and certified_length <= max_length + 1

    return NormBall(bound=bound, max_length=max_length, elements=elements, complete=complete)
