import orbitsieve
from orbitsieve import exceptions


def test_public_names_resolve() -> None:
    for name in orbitsieve.__all__:
        assert getattr(orbitsieve, name) is not None


def test_exceptions_share_a_base() -> None:
    assert issubclass(exceptions.ConfigError, exceptions.OrbitSieveError)
    assert issubclass(exceptions.EnumerationCapError, exceptions.OrbitSieveError)
    assert issubclass(exceptions.NonSymplecticError, exceptions.OrbitSieveError)


def test_end_to_end_orbit_sieve() -> None:
    preset = orbitsieve.get_preset('lubotzky')
    table = orbitsieve.generate_finite_image(preset, 5)
    rho = orbitsieve.mean_zero_spectral_radius(orbitsieve.cayley_graph(table)).rho0
    ensemble = orbitsieve.sample_walk(preset, 6, 50, seed=0)
    f = orbitsieve.Polynomial.from_expression('x0*x1', nvars=2)

    sifted = orbitsieve.legendre_sift(orbitsieve.SieveSequence.from_ensemble(ensemble, (1, 2), f), None, 3)

    assert 0 < rho < 1
    assert sifted.direct == sifted.inclusion_exclusion
    assert sifted.primes == (2,)
