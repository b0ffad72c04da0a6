import math
import typing as t
from dataclasses import dataclass

from orbitsieve_core.exactmath import IntMatrix, lattice_quotient, rank_mod_p
from orbitsieve_orbits.presets import standard_symplectic_form

from orbitsieve_dt3m.exceptions import InvalidGenusError, NonSymplecticError


@dataclass(frozen=True)
class HeegaardDatum:
    """Genus ``g`` and the action ``φ_*`` of the gluing map on ``Z^{2g}``.

    The basis is ``e_1 .. e_g, f_1 .. f_g`` with the standard symplectic form, and the Lagrangian ``J`` is
    spanned by ``e_1 .. e_g``.

    Raises:
        :obj:`NonSymplecticError`: ``phi_star`` does not preserve the standard symplectic form.
    """

    genus: int
    phi_star: IntMatrix

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise InvalidGenusError(f'Genus must be positive, got {self.genus}')

        n = 2 * self.genus
        if self.phi_star.shape != (n, n):
            raise NonSymplecticError(f'Genus {self.genus} needs a {n}x{n} matrix, got {self.phi_star.shape}')

        omega = standard_symplectic_form(self.genus)
        if self.phi_star.transpose() @ omega @ self.phi_star != omega:
            raise NonSymplecticError(f'{self.phi_star} does not preserve the symplectic form')

    @classmethod
    def from_matrix(cls, phi_star: IntMatrix) -> 'HeegaardDatum':
        n = phi_star.shape[0]
        if n % 2:
            raise NonSymplecticError(f'Symplectic matrices have even size, got {n}')
        return cls(genus=n // 2, phi_star=phi_star)

    @property
    def symplectic_form(self) -> IntMatrix:
        return standard_symplectic_form(self.genus)

    def lagrangian_matrix(self) -> IntMatrix:
        """Columns ``e_1 .. e_g`` followed by ``φ_* e_1 .. φ_* e_g``."""
        g = self.genus
        identity = IntMatrix.identity(2 * g)
        columns = [identity.column(j) for j in range(g)] + [self.phi_star.column(j) for j in range(g)]
        return IntMatrix.from_columns(columns)


@dataclass(frozen=True)
class HomologyResult:
    """``H_1 = Z^{2g} / ⟨J, φ_* J⟩``.

    ``torsion_order`` is the order of the torsion subgroup; ``order`` is ``0`` when ``H_1`` is infinite.
    """

    free_rank: int
    invariant_factors: t.Tuple[int, ...]
    torsion_order: int

    @property
    def finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        return self.torsion_order if self.finite else 0

    @property
    def torsion(self) -> t.Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    def dimension_mod(self, p: int) -> int:
        """``dim H_1 ⊗ F_p`` read off the invariant factors."""
        return sum(1 for d in self.invariant_factors if d % p == 0)


def homology_group(datum: HeegaardDatum) -> HomologyResult:
    quotient = lattice_quotient(datum.lagrangian_matrix())
    return HomologyResult(
        free_rank=quotient.free_rank,
        invariant_factors=quotient.invariant_factors,
        torsion_order=quotient.torsion_order,
    )


def homology_mod_p(datum: HeegaardDatum, p: int) -> int:
    """Dimension over ``F_p`` of ``H_1(M, F_p)``, from the rank of the reduced Lagrangian matrix."""
    return 2 * datum.genus - rank_mod_p(datum.lagrangian_matrix(), p)


@dataclass(frozen=True)
class TorsionSizeBound:
    """``log |H_1| <= 2g · log(2g · max|entry|)`` for finite ``H_1``; ``log_order`` is ``None`` when infinite."""

    log_order: t.Optional[float]
    bound: float

    @property
    def holds(self) -> bool:
        return self.log_order is None or self.log_order <= self.bound


def torsion_size_bound(datum: HeegaardDatum, result: t.Optional[HomologyResult] = None) -> TorsionSizeBound:
    result = result or homology_group(datum)
    n = 2 * datum.genus
    bound = n * math.log(n * datum.lagrangian_matrix().max_abs_entry())
    log_order = math.log(result.torsion_order) if result.finite else None
    return TorsionSizeBound(log_order=log_order, bound=bound)
