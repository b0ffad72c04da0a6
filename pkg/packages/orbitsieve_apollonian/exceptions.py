from orbitsieve_core.exceptions import OrbitSieveError


class InvalidQuadrupleError(OrbitSieveError):
    ...


class InvalidReflectionIndexError(OrbitSieveError):
    ...


class PackingBoundError(OrbitSieveError):
    ...


class DescentLimitError(OrbitSieveError):
    ...


class PackingSnapshotError(OrbitSieveError):
    ...
