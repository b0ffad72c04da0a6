from orbitsieve_orbits.cache.base_cache import TableBaseCache, TableCacheKey
from orbitsieve_orbits.cache.file_cache import TableFileCache
from orbitsieve_orbits.cache.in_memory_cache import TableInMemoryCache

__all__ = [
    'TableBaseCache',
    'TableCacheKey',
    'TableFileCache',
    'TableInMemoryCache',
]
