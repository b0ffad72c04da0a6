import typing as t

from orbitsieve_core.exceptions import OrbitSieveError


class ConfigError(OrbitSieveError):
    """Raised when a run configuration is invalid; ``line`` is the offending line of the file when known."""

    def __init__(self, message: str, line: t.Optional[int] = None) -> None:
        super().__init__(message)
        self.line = line
