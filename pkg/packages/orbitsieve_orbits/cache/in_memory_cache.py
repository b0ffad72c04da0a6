import typing as t

from orbitsieve_orbits.cache.base_cache import TableBaseCache

if t.TYPE_CHECKING:
    from orbitsieve_orbits.cache.base_cache import TableCacheKey
    from orbitsieve_orbits.finite import FiniteGroupTable


class TableInMemoryCache(TableBaseCache):
    def __init__(self) -> None:
        self._cache: t.Dict['TableCacheKey', 'FiniteGroupTable'] = {}

    def get(self, key: 'TableCacheKey') -> t.Optional['FiniteGroupTable']:
        return self._cache.get(key)

    def set(self, key: 'TableCacheKey', table: 'FiniteGroupTable') -> None:
        self._cache[key] = table

    def delete(self, key: 'TableCacheKey') -> None:
        del self._cache[key]

    def clear(self) -> None:
        self._cache.clear()
