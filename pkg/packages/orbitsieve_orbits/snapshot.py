import typing as t
from pathlib import Path

from orbitsieve_core.exactmath import IntMatrix
from orbitsieve_core.types import BigInt
from pydantic import BaseModel, ValidationError

from orbitsieve_orbits.exceptions import WalkSnapshotError
from orbitsieve_orbits.walks import WalkEnsemble

if t.TYPE_CHECKING:
    from orbitsieve_orbits.presets import GroupPreset


class WalkSnapshot(BaseModel):
    """On-disk form of a (possibly partial) walk ensemble; matrix entries are decimal strings."""

    preset_name: str
    preset_digest: str
    steps: int
    size: int
    seed: int
    samples: t.List[t.List[t.List[BigInt]]]


def write_walk_snapshot(ensemble: WalkEnsemble, path: t.Union[str, Path]) -> None:
    snapshot = WalkSnapshot(
        preset_name=ensemble.preset.name,
        preset_digest=ensemble.preset.digest(),
        steps=ensemble.steps,
        size=ensemble.size,
        seed=ensemble.seed,
        samples=[[list(row) for row in g.rows] for g in ensemble.samples],
    )
    Path(path).write_text(snapshot.model_dump_json(), encoding='utf-8')


def read_walk_snapshot(path: t.Union[str, Path], preset: 'GroupPreset') -> WalkEnsemble:
    """Load an ensemble written by :func:`write_walk_snapshot`.

    Raises:
        :obj:`WalkSnapshotError`: The file is malformed or belongs to another preset.
    """
    try:
        snapshot = WalkSnapshot.model_validate_json(Path(path).read_text(encoding='utf-8'))
    except (OSError, ValidationError) as e:
        raise WalkSnapshotError(f'Invalid walk snapshot {path}') from e

    if snapshot.preset_digest != preset.digest():
        raise WalkSnapshotError(f'Snapshot {path} was taken for preset {snapshot.preset_name!r}')

    samples = tuple(IntMatrix.from_rows(rows) for rows in snapshot.samples)
    return WalkEnsemble(preset, snapshot.steps, snapshot.size, snapshot.seed, samples)
