from orbitsieve_core.exceptions import OrbitSieveError


class InsufficientDataError(OrbitSieveError):
    ...


class DivisorBudgetError(OrbitSieveError):
    ...


class VanishingPolynomialError(OrbitSieveError):
    ...


class SieveIdentityError(OrbitSieveError):
    """Raised when inclusion-exclusion disagrees with the direct count, which indicates a bug."""


class SequenceFileError(OrbitSieveError):
    ...
