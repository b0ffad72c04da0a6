import typing as t
from abc import ABC, abstractmethod

if t.TYPE_CHECKING:
    from orbitsieve_orbits.finite import FiniteGroupTable


TableCacheKey = t.Tuple[str, int]


class TableBaseCache(ABC):
    """Abstract cache of finite group tables, keyed by ``(preset digest, modulus)``."""

    @abstractmethod
    def get(self, key: TableCacheKey) -> t.Optional['FiniteGroupTable']:
        """Get cached table.

        Args:
            key: Preset digest and modulus.

        Returns:
            :obj:`FiniteGroupTable`: Cached table or ``None`` if not found.
        """
        raise NotImplementedError

    @abstractmethod
    def set(self, key: TableCacheKey, table: 'FiniteGroupTable') -> None:
        raise NotImplementedError

    @abstractmethod
    def delete(self, key: TableCacheKey) -> None:
        raise NotImplementedError

    @abstractmethod
    def clear(self) -> None:
        raise NotImplementedError
