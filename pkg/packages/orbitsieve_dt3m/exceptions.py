from orbitsieve_core.exceptions import OrbitSieveError


class NonSymplecticError(OrbitSieveError):
    ...


class InvalidGenusError(OrbitSieveError):
    ...
