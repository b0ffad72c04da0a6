from orbitsieve_core.exceptions import OrbitSieveError


class InvalidPresetError(OrbitSieveError):
    ...


class EnumerationCapError(OrbitSieveError):
    """Raised when a finite enumeration outgrows its configured cap."""

    def __init__(self, message: str, cap: int, size: int) -> None:
        super().__init__(message)
        self.cap = cap
        self.size = size


class WalkSnapshotError(OrbitSieveError):
    ...


class TableCacheError(OrbitSieveError):
    ...
