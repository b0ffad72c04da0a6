import logging
import typing as t
from pathlib import Path

import numpy as np

from orbitsieve_orbits.cache.base_cache import TableBaseCache
from orbitsieve_orbits.exceptions import TableCacheError
from orbitsieve_orbits.finite import FiniteGroupTable

if t.TYPE_CHECKING:
    from orbitsieve_orbits.cache.base_cache import TableCacheKey

_logger = logging.getLogger(__name__)

_MAX_STORED_MODULUS = 2**62


class TableFileCache(TableBaseCache):
    """Tables stored as ``.npz`` files in ``directory``, one per key.

    Args:
        directory: Cache directory, created on first write.
    """

    def __init__(self, directory: t.Union[str, Path]) -> None:
        self.directory = Path(directory)

    def _path(self, key: 'TableCacheKey') -> Path:
        digest, modulus = key
        return self.directory / f'{digest}-{modulus}.npz'

    def get(self, key: 'TableCacheKey') -> t.Optional[FiniteGroupTable]:
        path = self._path(key)
        if not path.exists():
            return None

        try:
            with np.load(path, allow_pickle=False) as data:
                modulus, degree, exceptional = (int(x) for x in data['header'])
                return FiniteGroupTable(
                    modulus=modulus,
                    degree=degree,
                    generators=tuple(tuple(int(x) for x in g) for g in data['generators']),
                    weights=tuple(int(w) for w in data['weights']),
                    elements=tuple(tuple(int(x) for x in e) for e in data['elements']),
                    action=data['action'].astype(np.int64),
                    exceptional=bool(exceptional),
                    preset_name=str(data['preset_name']),
                )
        except (OSError, KeyError, ValueError) as e:
            raise TableCacheError(f'Corrupt table cache entry {path}') from e

    def set(self, key: 'TableCacheKey', table: FiniteGroupTable) -> None:
        if table.modulus >= _MAX_STORED_MODULUS:
            _logger.debug('Not caching a table modulo %d: entries do not fit in int64', table.modulus)
            return

        self.directory.mkdir(parents=True, exist_ok=True)
        np.savez_compressed(
            self._path(key),
            header=np.array([table.modulus, table.degree, int(table.exceptional)], dtype=np.int64),
            generators=np.array(table.generators, dtype=np.int64),
            weights=np.array(table.weights, dtype=np.int64),
            elements=np.array(table.elements, dtype=np.int64),
            action=table.action,
            preset_name=np.array(table.preset_name),
        )

    def delete(self, key: 'TableCacheKey') -> None:
        self._path(key).unlink()

    def clear(self) -> None:
        for path in self.directory.glob('*.npz'):
            path.unlink()
