import csv
import dataclasses
import json
import math
import typing as t
from enum import Enum
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

from pydantic import BaseModel

if t.TYPE_CHECKING:
    from orbitsieve_cli.config import RunConfig

_PACKAGE_NAME = 'orbitsieve'
_UNKNOWN_VERSION = '0.0.0'


def get_version() -> str:
    try:
        return version(_PACKAGE_NAME)
    except PackageNotFoundError:
        return _UNKNOWN_VERSION


class ReportMetadata(BaseModel):
    """Header of every artifact: what produced it and with which configuration."""

    command: str
    version: str
    seed: int
    config: t.Dict[str, t.Any]

    @classmethod
    def from_config(cls, config: 'RunConfig') -> 'ReportMetadata':
        return cls(command=config.command or '', version=get_version(), seed=config.seed, config=config.metadata())


def plain(value: t.Any) -> t.Any:  # noqa: C901
    """Convert results into JSON-compatible values; fractions become exact ``p/q`` strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return value.as_posix()
    if isinstance(value, BaseModel):
        return plain(value.model_dump(mode='python'))
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: plain(getattr(value, f.name)) for f in dataclasses.fields(value) if not f.name.startswith('_')}
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    raise TypeError(f'Cannot serialize {type(value).__name__}')


def _dumps(document: t.Any, indent: t.Optional[int] = None) -> str:
    return json.dumps(document, sort_keys=True, indent=indent, ensure_ascii=False, allow_nan=False)


def write_json(path: Path, metadata: ReportMetadata, report: t.Mapping[str, t.Any]) -> Path:
    """Write ``{"metadata": ..., "report": ...}`` with sorted keys; equal inputs give byte-identical files."""
    document = {'metadata': plain(metadata), 'report': plain(report)}
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_dumps(document, indent=2) + '\n', encoding='utf-8')
    return path


def write_csv(
    path: Path, metadata: ReportMetadata, header: t.Sequence[str], rows: t.Iterable[t.Sequence[t.Any]]
) -> Path:
    """Write a CSV table whose first line is ``#`` followed by the metadata as compact JSON."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write('# ' + _dumps(plain(metadata)) + '\n')
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow(['' if v is None else plain(v) for v in row])
    return path
