import typing as t
from pathlib import Path

from orbitsieve_core.types import BigInt
from pydantic import BaseModel, ValidationError

from orbitsieve_apollonian.descartes import DescartesQuadruple, Quadruple
from orbitsieve_apollonian.exceptions import InvalidQuadrupleError, PackingSnapshotError
from orbitsieve_apollonian.packing import Packing, PackingState

_HEADER_PREFIX = '# orbitsieve packing'
_CURVATURES_PREFIX = '# curvatures'


def _format_row(values: t.Iterable[int]) -> str:
    return ' '.join(str(v) for v in values)


def _parse_row(line: str, line_number: int) -> Quadruple:
    try:
        a, b, c, d = (int(x) for x in line.split())
    except ValueError as e:
        raise PackingSnapshotError(f'Line {line_number}: expected four integers, got {line!r}') from e
    return a, b, c, d


def write_snapshot(packing: Packing, path: t.Union[str, Path]) -> None:
    """Write ``packing`` as sorted newline-delimited quadruples.

    The header line records the root, the bound and the completeness flag; a trailing comment line holds the
    curvature multiset. Output is byte-identical for equal packings.
    """
    lines = [
        f'{_HEADER_PREFIX} root {_format_row(packing.root.as_tuple())} '
        f'bound {packing.bound} complete {int(packing.complete)}'
    ]
    lines.extend(_format_row(q) for q in sorted(packing.quadruples))
    lines.append(f'{_CURVATURES_PREFIX} {_format_row(packing.curvatures)}')

    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write('\n'.join(lines) + '\n')


def _parse_curvatures(line: str, line_number: int) -> t.Tuple[int, ...]:
    try:
        return tuple(sorted(int(x) for x in line[len(_CURVATURES_PREFIX) :].split()))
    except ValueError as e:
        raise PackingSnapshotError(f'Line {line_number}: malformed curvature list') from e


def read_snapshot(path: t.Union[str, Path]) -> Packing:
    """Read a packing written by :func:`write_snapshot`.

    Snapshots without a curvature line get their multiset rebuilt from the root circles plus the largest
    curvature of every other quadruple. That is exact only when the root is sum-minimal, since the new circle
    of a quadruple reached by reflecting towards the root is not its largest one.
    """
    with open(path, encoding='utf-8') as f:
        lines = f.read().splitlines()

    if not lines or not lines[0].startswith(_HEADER_PREFIX):
        raise PackingSnapshotError(f'{path} is not a packing snapshot')

    fields = lines[0][len(_HEADER_PREFIX) :].split()
    try:
        root = DescartesQuadruple.from_sequence([int(x) for x in fields[1:5]])
        bound = int(fields[6])
        complete = bool(int(fields[8]))
    except (IndexError, ValueError, InvalidQuadrupleError) as e:
        raise PackingSnapshotError(f'Line 1: malformed snapshot header {lines[0]!r}') from e

    rows = []
    stored: t.Optional[t.Tuple[int, ...]] = None
    for number, line in enumerate(lines[1:], start=2):
        if line.startswith(_CURVATURES_PREFIX):
            stored = _parse_curvatures(line, number)
        elif line:
            rows.append(_parse_row(line, number))

    quadruples = frozenset(rows)
    if stored is None:
        curvatures = list(root.key())
        curvatures.extend(max(q) for q in quadruples if q != root.key())
        stored = tuple(sorted(curvatures))

    return Packing(
        root=root,
        bound=bound,
        quadruples=quadruples,
        curvatures=stored,
        complete=complete,
    )


class PackingCheckpoint(BaseModel):
    root: t.List[BigInt]
    bound: BigInt
    seen: t.List[t.List[BigInt]]
    frontier: t.List[t.List[BigInt]]
    curvatures: t.List[BigInt]


def write_checkpoint(state: PackingState, path: t.Union[str, Path]) -> None:
    checkpoint = PackingCheckpoint(
        root=list(state.root.as_tuple()),
        bound=state.bound,
        seen=[list(q) for q in sorted(state.seen)],
        frontier=[list(q) for q in state.frontier],
        curvatures=list(state.curvatures),
    )
    Path(path).write_text(checkpoint.model_dump_json(), encoding='utf-8')


def _as_quadruple(values: t.List[int]) -> Quadruple:
    a, b, c, d = values
    return a, b, c, d


def read_checkpoint(path: t.Union[str, Path]) -> PackingState:
    try:
        checkpoint = PackingCheckpoint.model_validate_json(Path(path).read_text(encoding='utf-8'))
        return PackingState(
            root=DescartesQuadruple.from_sequence(checkpoint.root),
            bound=checkpoint.bound,
            seen={_as_quadruple(q) for q in checkpoint.seen},
            frontier=[_as_quadruple(q) for q in checkpoint.frontier],
            curvatures=list(checkpoint.curvatures),
        )
    except (ValidationError, ValueError, InvalidQuadrupleError) as e:
        raise PackingSnapshotError(f'Invalid packing checkpoint {path}') from e
