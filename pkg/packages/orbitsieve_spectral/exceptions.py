import typing as t

from orbitsieve_core.exceptions import OrbitSieveError


class SpectralError(OrbitSieveError):
    ...


class NotGeneratingError(OrbitSieveError):
    """Raised when a subset does not generate the whole table; ``subgroup`` holds what it does generate."""

    def __init__(self, message: str, subgroup: t.FrozenSet[int]) -> None:
        super().__init__(message)
        self.subgroup = subgroup
