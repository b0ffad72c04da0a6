import logging
import typing as t
from collections import Counter
from dataclasses import dataclass, field

from orbitsieve_apollonian.descartes import DescartesQuadruple, Quadruple, _other_root, _replace
from orbitsieve_apollonian.exceptions import PackingBoundError

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Packing:
    """Integral Apollonian packing truncated at a curvature ceiling.

    ``curvatures`` holds one entry per circle: the four root circles followed by the new circle of every other
    quadruple. ``complete`` is ``False`` when enumeration stopped at the quadruple cap before the ceiling.
    """

    root: DescartesQuadruple
    bound: int
    quadruples: t.FrozenSet[Quadruple]
    curvatures: t.Tuple[int, ...]
    complete: bool = True


@dataclass
class PackingState:
    """Mutable breadth-first state, enough to resume an interrupted enumeration."""

    root: DescartesQuadruple
    bound: int
    seen: t.Set[Quadruple] = field(default_factory=set)
    frontier: t.List[Quadruple] = field(default_factory=list)
    curvatures: t.List[int] = field(default_factory=list)

    @classmethod
    def start(cls, root: DescartesQuadruple, bound: int) -> 'PackingState':
        key = root.key()
        return cls(root=root, bound=bound, seen={key}, frontier=[key], curvatures=list(key))

    @property
    def done(self) -> bool:
        return not self.frontier


PackingCheckpointCallback = t.Callable[[PackingState], None]


def _expand(quadruple: Quadruple, bound: int) -> t.Iterator[t.Tuple[Quadruple, int]]:
    for index in range(4):
        value = _other_root(quadruple, index)
        if value == quadruple[index] or value > bound:
            continue

        a, b, c, d = sorted(_replace(quadruple, index, value))
        yield (a, b, c, d), value


def enumerate_packing(
    root: DescartesQuadruple,
    bound: int,
    max_quadruples: t.Optional[int] = None,
    checkpoint: t.Optional[PackingCheckpointCallback] = None,
    resume: t.Optional[PackingState] = None,
) -> Packing:
    """Breadth-first closure of ``root`` under the four reflections.

    A reflected quadruple is kept only when its new curvature is at most ``bound``. Quadruples are
    deduplicated by their sorted curvatures; each new quadruple contributes its new circle's curvature to the
    multiset once.

    Args:
        root: Starting quadruple, normally a root quadruple (see :func:`reduce_to_root`).
        bound: Curvature ceiling.
        max_quadruples: Stop once this many quadruples are known; the result is flagged incomplete.
        checkpoint: Called with the current state after every breadth-first layer.
        resume: State returned by an earlier interrupted call.

    Returns:
        :obj:`Packing`: Enumerated packing.

    Raises:
        :obj:`PackingBoundError`: ``bound`` is below a curvature of ``root``.
    """
    if bound < max(root.as_tuple()):
        raise PackingBoundError(f'Bound {bound} is below the root curvatures {root}')

    state = resume or PackingState.start(root, bound)
    if resume is not None and (resume.root.key() != root.key() or resume.bound != bound):
        raise PackingBoundError('Checkpoint was taken for a different root or bound')

    layer = 0
    while state.frontier:
        if max_quadruples is not None and len(state.seen) >= max_quadruples:
            _logger.info('Quadruple cap %d reached with %d pending', max_quadruples, len(state.frontier))
            break

        next_frontier: t.List[Quadruple] = []
        for quadruple in state.frontier:
            for child, curvature in _expand(quadruple, bound):
                if child in state.seen:
                    continue
                state.seen.add(child)
                state.curvatures.append(curvature)
                next_frontier.append(child)

        state.frontier = next_frontier
        layer += 1
        _logger.debug('Layer %d: %d quadruples, %d in frontier', layer, len(state.seen), len(next_frontier))

        if checkpoint is not None:
            checkpoint(state)

    return Packing(
        root=root,
        bound=bound,
        quadruples=frozenset(state.seen),
        curvatures=tuple(sorted(state.curvatures)),
        complete=state.done,
    )


def curvature_counts(packing: Packing, with_multiplicity: bool = True) -> t.Dict[int, int]:
    """Curvature multiset of a packing.

    Args:
        packing: Enumerated packing.
        with_multiplicity: Count every circle; otherwise every distinct curvature once.

    Returns:
        :obj:`dict`: Curvature to count, ordered by curvature.
    """
    counts = Counter(packing.curvatures)
    if not with_multiplicity:
        return {c: 1 for c in sorted(counts)}
    return {c: counts[c] for c in sorted(counts)}


def tangent_pairs(packing: Packing, a: int, b: int) -> t.List[Quadruple]:
    """Quadruples of ``packing`` containing circles of curvatures ``a`` and ``b``.

    Circles in a common Descartes quadruple are mutually tangent.
    """
    needed = Counter((a, b))
    return sorted(q for q in packing.quadruples if not needed - Counter(q))
