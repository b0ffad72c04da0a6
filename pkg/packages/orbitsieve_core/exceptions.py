import typing as t

if t.TYPE_CHECKING:
    from orbitsieve_core.exactmath.factor import Factorization


class OrbitSieveError(Exception):
    """Base exception."""


class InvalidModulusError(OrbitSieveError):
    ...


class NonSquarefreeModulusError(InvalidModulusError):
    ...


class DimensionMismatchError(OrbitSieveError):
    ...


class PolynomialParsingError(OrbitSieveError):
    ...


class FactorizationError(OrbitSieveError):
    ...


class FactorizationEffortError(FactorizationError):
    """Raised when a value could not be fully factored within the configured effort bound."""

    def __init__(self, message: str, partial: 'Factorization') -> None:
        super().__init__(message)
        self.partial = partial
