import hashlib
import typing as t
from dataclasses import dataclass, field
from enum import Enum

import sympy
from orbitsieve_core.exactmath import IntMatrix, prime_factors

from orbitsieve_orbits.exceptions import InvalidPresetError


class AmbientKind(str, Enum):
    SPECIAL_LINEAR = 'SL'
    SYMPLECTIC = 'Sp'
    ORTHOGONAL = 'O'


def standard_symplectic_form(g: int) -> IntMatrix:
    """Gram matrix ``[[0, I], [-I, 0]]`` of the standard symplectic form on ``Z^{2g}``."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[i][g + i] = 1
        rows[g + i][i] = -1
    return IntMatrix.from_rows(rows)


@dataclass(frozen=True)
class AmbientGroup:
    """Algebraic group a preset lives in.

    Args:
        kind: Family of the group.
        degree: Matrix size ``m``; ``2g`` for symplectic groups.
        gram: Gram matrix of the preserved quadratic form (orthogonal groups only).
    """

    kind: AmbientKind
    degree: int
    gram: t.Optional[IntMatrix] = None

    @classmethod
    def special_linear(cls, m: int) -> 'AmbientGroup':
        return cls(AmbientKind.SPECIAL_LINEAR, m)

    @classmethod
    def symplectic(cls, g: int) -> 'AmbientGroup':
        return cls(AmbientKind.SYMPLECTIC, 2 * g)

    @classmethod
    def orthogonal(cls, gram: IntMatrix) -> 'AmbientGroup':
        return cls(AmbientKind.ORTHOGONAL, gram.shape[0], gram)

    @property
    def genus(self) -> int:
        return self.degree // 2

    def contains(self, matrix: IntMatrix) -> bool:
        if matrix.shape != (self.degree, self.degree):
            return False

        if self.kind is AmbientKind.SPECIAL_LINEAR:
            return matrix.determinant() == 1

        if self.kind is AmbientKind.SYMPLECTIC:
            omega = standard_symplectic_form(self.genus)
            return matrix.transpose() @ omega @ matrix == omega

        assert self.gram is not None
        return matrix.transpose() @ self.gram @ matrix == self.gram

    def order_mod_prime(self, p: int) -> t.Optional[int]:
        """Order of the group of ``F_p``-points, ``None`` when no closed form is used."""
        if self.kind is AmbientKind.SPECIAL_LINEAR:
            order = p ** (self.degree * (self.degree - 1) // 2)
            for i in range(2, self.degree + 1):
                order *= p**i - 1
            return order

        if self.kind is AmbientKind.SYMPLECTIC:
            g = self.genus
            order = p ** (g * g)
            for i in range(1, g + 1):
                order *= p ** (2 * i) - 1
            return order

        return None

    def order_mod(self, d: int) -> t.Optional[int]:
        """Order of the group over ``Z/dZ`` for squarefree ``d`` (a product over the primes of ``d``)."""
        order = 1
        for p in prime_factors(d):
            local = self.order_mod_prime(p)
            if local is None:
                return None
            order *= local
        return order


@dataclass(frozen=True)
class GroupPreset:
    """Finitely generated matrix group with a symmetric generating multiset.

    ``generators`` is a multiset: repeated entries are kept and each entry is one equally likely step unless
    ``weights`` says otherwise. The identity must be present and the multiset must be closed under inverses.

    Args:
        name: Preset name.
        ambient: Ambient algebraic group.
        generators: Generator multiset.
        exceptional_primes: Primes where strong approximation is known or assumed to fail.
        weights: Optional positive integer step weight per generator, equal on inverse pairs.
    """

    name: str
    ambient: AmbientGroup
    generators: t.Tuple[IntMatrix, ...]
    exceptional_primes: t.FrozenSet[int] = field(default_factory=frozenset)
    weights: t.Optional[t.Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if not self.generators:
            raise InvalidPresetError(f'Preset {self.name} has no generators')

        for generator in self.generators:
            if not self.ambient.contains(generator):
                raise InvalidPresetError(f'Generator {generator} of {self.name} is not in {self.ambient.kind.value}')

        identity = IntMatrix.identity(self.ambient.degree)
        if identity not in self.generators:
            raise InvalidPresetError(f'Preset {self.name} does not contain the identity')

        inverses = [self._inverse_position(g) for g in self.generators]
        if any(i is None for i in inverses):
            raise InvalidPresetError(f'Generators of {self.name} are not closed under inverses')

        if self.weights is not None:
            if len(self.weights) != len(self.generators) or any(w <= 0 for w in self.weights):
                raise InvalidPresetError(f'Preset {self.name} needs one positive weight per generator')
            for position, inverse in enumerate(inverses):
                if self.weights[position] != self.weights[inverse]:  # type: ignore[index]
                    raise InvalidPresetError(f'Weights of {self.name} differ on an inverse pair')

    def _inverse_position(self, generator: IntMatrix) -> t.Optional[int]:
        identity = IntMatrix.identity(self.ambient.degree)
        return next((i for i, h in enumerate(self.generators) if generator @ h == identity), None)

    @property
    def size(self) -> int:
        """Number of steps in the generator multiset, counted with multiplicity."""
        return len(self.generators)

    @property
    def degree(self) -> int:
        return self.ambient.degree

    @property
    def step_weights(self) -> t.Tuple[int, ...]:
        return self.weights or (1,) * len(self.generators)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.step_weights)) == 1

    def digest(self) -> str:
        """Stable fingerprint of the generators, ambient group and weights."""
        payload = repr(
            (
                self.ambient.kind.value,
                self.ambient.degree,
                self.ambient.gram.rows if self.ambient.gram else None,
                tuple(g.rows for g in self.generators),
                self.step_weights,
            )
        )
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()[:16]

    def with_exceptional_primes(self, primes: t.Iterable[int]) -> 'GroupPreset':
        return GroupPreset(self.name, self.ambient, self.generators, frozenset(primes), self.weights)


def integer_inverse(matrix: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix."""
    try:
        inverse = sympy.Matrix(matrix.rows).inv()
    except ValueError as e:
        raise InvalidPresetError(f'{matrix} is not invertible') from e

    if any(not x.is_integer for x in inverse):
        raise InvalidPresetError(f'{matrix} has no integral inverse')

    return IntMatrix.from_rows(inverse.tolist())


def symmetric_generators(matrices: t.Iterable[IntMatrix]) -> t.Tuple[IntMatrix, ...]:
    """Identity followed by every matrix and its inverse, in input order."""
    matrices = list(matrices)
    if not matrices:
        raise InvalidPresetError('At least one generator is required')

    degree = matrices[0].shape[0]
    generators = [IntMatrix.identity(degree)]
    for matrix in matrices:
        generators.extend((matrix, integer_inverse(matrix)))
    return tuple(generators)


def lubotzky() -> GroupPreset:
    """Thin subgroup of ``SL_2(Z)`` generated by ``[[1, 3], [0, 1]]`` and ``[[1, 0], [3, 1]]``.

    Its image modulo ``3`` is trivial and it surjects onto ``SL_2(F_p)`` for every other prime.
    """
    a = IntMatrix.from_rows([[1, 3], [0, 1]])
    b = IntMatrix.from_rows([[1, 0], [3, 1]])
    return GroupPreset('lubotzky', AmbientGroup.special_linear(2), symmetric_generators([a, b]), frozenset({3}))


def sl2z() -> GroupPreset:
    u = IntMatrix.from_rows([[1, 1], [0, 1]])
    lower = IntMatrix.from_rows([[1, 0], [1, 1]])
    return GroupPreset('sl2z', AmbientGroup.special_linear(2), symmetric_generators([u, lower]))


def descartes_gram() -> IntMatrix:
    """Gram matrix ``2I - J`` of the Descartes form."""
    return IntMatrix.from_rows([[2 * (i == j) - 1 for j in range(4)] for i in range(4)])


def apollonian_reflection(i: int) -> IntMatrix:
    """Matrix of ``s_i`` acting on column vectors of curvatures (``i`` is 1-based)."""
    rows = [[int(r == c) for c in range(4)] for r in range(4)]
    rows[i - 1] = [-1 if c == i - 1 else 2 for c in range(4)]
    return IntMatrix.from_rows(rows)


def apollonian() -> GroupPreset:
    """Apollonian group generated by the four reflections ``s_1 .. s_4`` (each its own inverse)."""
    generators = (IntMatrix.identity(4),) + tuple(apollonian_reflection(i) for i in range(1, 5))
    return GroupPreset('apollonian', AmbientGroup.orthogonal(descartes_gram()), generators)


def symplectic_transvection(vector: t.Sequence[int]) -> IntMatrix:
    """Transvection ``I - v·vᵀ·Ω`` along ``vector``; it preserves the standard symplectic form."""
    n = len(vector)
    if n % 2:
        raise InvalidPresetError(f'Symplectic vectors have even length, got {n}')

    omega = standard_symplectic_form(n // 2)
    outer = IntMatrix.from_rows([[a * b for b in vector] for a in vector])
    product = outer @ omega
    return IntMatrix.from_rows(
        [[int(i == j) - product.rows[i][j] for j in range(n)] for i in range(n)],
    )


def _chain_vectors(g: int) -> t.List[t.List[int]]:
    def basis(index: int) -> t.List[int]:
        return [int(i == index) for i in range(2 * g)]

    if g == 1:
        return [basis(0), basis(1)]
    if g == 2:
        e1, f1, e2, f2 = basis(0), basis(2), basis(1), basis(3)
        return [e1, f1, [a - b for a, b in zip(e1, e2)], f2, e2]

    raise InvalidPresetError(f'No built-in symplectic generators for genus {g}; list them in the config')


def symplectic(g: int) -> GroupPreset:
    """``Sp_{2g}(Z)`` for ``g`` in ``{1, 2}`` via transvections along a chain of curves.

    Basis order is ``e_1 .. e_g, f_1 .. f_g`` with ``ω(e_i, f_i) = 1``.
    """
    transvections = [symplectic_transvection(v) for v in _chain_vectors(g)]
    return GroupPreset(f'sp{2 * g}z', AmbientGroup.symplectic(g), symmetric_generators(transvections))


def sp4z() -> GroupPreset:
    return symplectic(2)


_BUILTIN_PRESETS: t.Dict[str, t.Callable[[], GroupPreset]] = {
    'lubotzky': lubotzky,
    'sl2z': sl2z,
    'apollonian': apollonian,
    'sp2z': lambda: symplectic(1),
    'sp4z': sp4z,
}


def builtin_preset_names() -> t.List[str]:
    return sorted(_BUILTIN_PRESETS)


def get_preset(name: str) -> GroupPreset:
    """Built-in preset by name.

    Raises:
        :obj:`InvalidPresetError`: Unknown name.
    """
    factory = _BUILTIN_PRESETS.get(name)
    if factory is None:
        raise InvalidPresetError(f'Unknown preset {name!r}; known presets: {", ".join(builtin_preset_names())}')
    return factory()
