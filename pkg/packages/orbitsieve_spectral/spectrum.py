import logging
import typing as t
from dataclasses import dataclass

import numpy as np
import typing_extensions as te
from orbitsieve_core.consts import SPECTRAL_MAX_ITERATIONS, SPECTRAL_TOLERANCE
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, LinearOperator, eigsh

from orbitsieve_spectral.exceptions import SpectralError
from orbitsieve_spectral.graph import CayleyGraph, markov_matrix

_logger = logging.getLogger(__name__)

_DEFAULT_TOLERANCE = SPECTRAL_TOLERANCE
_DEFAULT_MAX_ITERATIONS = SPECTRAL_MAX_ITERATIONS
_DENSE_LIMIT = 2_000

Method = te.Literal['auto', 'dense', 'lanczos', 'power']


@dataclass(frozen=True)
class SpectralReport:
    """Spectral radius of the Markov operator on mean-zero functions.

    ``lambda_2`` and ``lambda_min`` are the largest and smallest mean-zero eigenvalues. Both are ``None`` for the
    power method, which only yields ``rho0``, and for a trivial image. ``converged`` is ``False`` when the
    iteration limit was reached; ``rho0`` is then the last estimate. ``iterations`` is ``0`` when the solver does
    not report it.
    """

    modulus: int
    size: int
    rho0: float
    lambda_2: t.Optional[float]
    lambda_min: t.Optional[float]
    iterations: int
    tolerance: float
    converged: bool
    method: str


def _project(v: np.ndarray) -> np.ndarray:
    return v - v.mean()


def _start_vector(n: int) -> np.ndarray:
    v = _project(np.random.default_rng(0).standard_normal(n))
    return v / np.linalg.norm(v)


def _dense(graph: CayleyGraph) -> t.Tuple[float, float]:
    eigenvalues = np.linalg.eigvalsh(markov_matrix(graph).toarray())
    # the constant function carries the top eigenvalue 1, which is simple on a connected graph
    return float(eigenvalues[-2]), float(eigenvalues[0])


def _deflated(graph: CayleyGraph, constant_eigenvalue: float) -> LinearOperator:
    """Markov operator on mean-zero functions, with the constants moved to ``constant_eigenvalue``."""
    matrix = markov_matrix(graph)
    n = graph.size

    def matvec(v: np.ndarray) -> np.ndarray:
        v = np.ravel(v)
        mean = v.mean()
        return _project(matrix @ (v - mean)) + constant_eigenvalue * mean

    return LinearOperator((n, n), matvec=matvec, dtype=np.float64)


def _lanczos(graph: CayleyGraph, tolerance: float, max_iterations: int) -> t.Tuple[float, float]:
    # the spectrum lies in [-1, 1], so constants parked at -2 or 2 are never the extreme sought
    v0 = _start_vector(graph.size)
    options = {'k': 1, 'tol': tolerance, 'maxiter': max_iterations, 'v0': v0, 'return_eigenvectors': False}
    largest = eigsh(_deflated(graph, -2.0), which='LA', **options)
    smallest = eigsh(_deflated(graph, 2.0), which='SA', **options)
    return float(largest[0]), float(smallest[0])


def _power(graph: CayleyGraph, tolerance: float, max_iterations: int) -> t.Tuple[float, int, bool]:
    matrix = markov_matrix(graph)
    v = _start_vector(graph.size)
    estimate = 0.0
    for iteration in range(1, max_iterations + 1):
        # two steps per iteration: M² has the non-negative top eigenvalue ρ₀² on mean-zero functions
        w = _project(matrix @ _project(matrix @ v))
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0, iteration, True

        previous, estimate = estimate, float(np.sqrt(norm))
        v = w / norm
        if abs(estimate - previous) < tolerance:
            return estimate, iteration, True

    return estimate, max_iterations, False


def mean_zero_spectral_radius(
    graph: CayleyGraph,
    tolerance: float = _DEFAULT_TOLERANCE,
    max_iterations: int = _DEFAULT_MAX_ITERATIONS,
    method: Method = 'auto',
) -> SpectralReport:
    """Compute ``ρ₀ = max(|λ_2|, |λ_min|)`` of the Markov operator restricted to mean-zero functions.

    ``auto`` uses a dense eigensolve up to 2000 vertices and Lanczos on the mean-projected operator beyond.
    When Lanczos does not converge the power method on the same projected operator takes over.

    Args:
        graph: Connected Cayley graph.
        tolerance: Convergence tolerance.
        max_iterations: Iteration limit.
        method: ``auto``, ``dense``, ``lanczos`` or ``power``.

    Returns:
        :obj:`SpectralReport`: The spectral report.
    """
    modulus = graph.table.modulus
    n = graph.size
    if n == 1:
        return SpectralReport(modulus, n, 0.0, None, None, 0, tolerance, True, 'trivial')

    if method == 'auto':
        method = 'dense' if n <= _DENSE_LIMIT else 'lanczos'

    if method == 'dense':
        lambda_2, lambda_min = _dense(graph)
        rho0 = max(abs(lambda_2), abs(lambda_min))
        return SpectralReport(modulus, n, rho0, lambda_2, lambda_min, 1, tolerance, True, method)

    if method == 'lanczos':
        try:
            lambda_2, lambda_min = _lanczos(graph, tolerance, max_iterations)
            rho0 = max(abs(lambda_2), abs(lambda_min))
            return SpectralReport(modulus, n, rho0, lambda_2, lambda_min, 0, tolerance, True, method)
        except ArpackNoConvergence:
            _logger.warning('Lanczos did not converge for d=%d, falling back to the power method', modulus)
        except ArpackError as e:
            raise SpectralError(f'Eigensolver failed for d={modulus}') from e
        method = 'power'

    if method == 'power':
        rho0, iterations, converged = _power(graph, tolerance, max_iterations)
        if not converged:
            _logger.warning('Power method stopped at %d iterations for d=%d', iterations, modulus)
        return SpectralReport(modulus, n, rho0, None, None, iterations, tolerance, converged, method)

    raise SpectralError(f'Unknown spectral method {method!r}')
