import logging
import typing as t
from dataclasses import dataclass, field

import numpy as np
from orbitsieve_core.consts import ENUMERATION_CAP
from orbitsieve_core.exactmath import IntMatrix, ensure_squarefree, primes_below

from orbitsieve_orbits.exceptions import EnumerationCapError

if t.TYPE_CHECKING:
    from orbitsieve_orbits.cache.base_cache import TableBaseCache
    from orbitsieve_orbits.presets import GroupPreset

_logger = logging.getLogger(__name__)

_DEFAULT_ENUMERATION_CAP = ENUMERATION_CAP

Flat = t.Tuple[int, ...]


def reduce_mod(g: IntMatrix, d: int) -> IntMatrix:
    """Entrywise reduction of ``g`` modulo the squarefree ``d``.

    Raises:
        :obj:`NonSquarefreeModulusError`: ``d`` has a square factor.
        :obj:`InvalidModulusError`: ``d < 2``.
    """
    ensure_squarefree(d, minimum=2)
    return g.reduce(d)


def _multiply_mod(a: Flat, b: Flat, m: int, d: int) -> Flat:
    if m == 2:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            (a0 * b0 + a1 * b2) % d,
            (a0 * b1 + a1 * b3) % d,
            (a2 * b0 + a3 * b2) % d,
            (a2 * b1 + a3 * b3) % d,
        )

    return tuple(
        sum(a[i * m + k] * b[k * m + j] for k in range(m)) % d for i in range(m) for j in range(m)
    )


def _to_matrix(flat: Flat, m: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(flat[i * m : (i + 1) * m]) for i in range(m)))


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    """Image of a preset modulo a squarefree ``d`` with its Cayley action.

    Elements are stored flattened row by row with entries in ``[0, d)``, in breadth-first discovery order
    from the identity (index ``0``). ``action[x, s]`` is the index of ``element[x] · generator[s]``; every
    column is a permutation of the elements.

    Args:
        modulus: The squarefree modulus ``d``.
        degree: Matrix size.
        generators: Reduced generator multiset, in preset order.
        weights: Step weight per generator.
        elements: Group elements.
        action: Right-multiplication table, shape ``(size, len(generators))``.
        exceptional: ``True`` when ``d`` shares a prime with the preset's exceptional set.
        preset_name: Name of the preset the table was generated from.
    """

    modulus: int
    degree: int
    generators: t.Tuple[Flat, ...]
    weights: t.Tuple[int, ...]
    elements: t.Tuple[Flat, ...]
    action: np.ndarray
    exceptional: bool = False
    preset_name: str = ''
    _index: t.Dict[Flat, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, '_index', {e: i for i, e in enumerate(self.elements)})

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def arity(self) -> int:
        """Number of steps in the generator multiset."""
        return len(self.generators)

    def index_of(self, element: t.Union[IntMatrix, Flat]) -> t.Optional[int]:
        flat = element.reduce(self.modulus).flat() if isinstance(element, IntMatrix) else element
        return self._index.get(flat)

    def __contains__(self, element: t.Union[IntMatrix, Flat]) -> bool:
        return self.index_of(element) is not None

    def matrix(self, index: int) -> IntMatrix:
        return _to_matrix(self.elements[index], self.degree)

    def matrices(self) -> t.Iterator[IntMatrix]:
        for index in range(self.size):
            yield self.matrix(index)

    def multiply(self, x: int, y: int) -> int:
        product = _multiply_mod(self.elements[x], self.elements[y], self.degree, self.modulus)
        return self._index[product]

    def generator_indices(self) -> t.List[int]:
        return [self._index[g] for g in self.generators]


def generate_finite_image(
    preset: 'GroupPreset',
    d: int,
    cap: int = _DEFAULT_ENUMERATION_CAP,
    cache: t.Optional['TableBaseCache'] = None,
) -> FiniteGroupTable:
    """Enumerate the image of ``preset`` modulo ``d`` by breadth-first closure.

    Args:
        preset: Group preset.
        d: Squarefree modulus, at least ``2``.
        cap: Largest table size that is enumerated.
        cache: Optional table cache keyed by preset digest and modulus.

    Returns:
        :obj:`FiniteGroupTable`: The finite image.

    Raises:
        :obj:`EnumerationCapError`: The image has more than ``cap`` elements.
    """
    primes = ensure_squarefree(d, minimum=2)

    key = (preset.digest(), d)
    if cache is not None:
        cached = cache.get(key)
        if cached is not None:
            return cached

    m = preset.degree
    generators = tuple(g.reduce(d).flat() for g in preset.generators)
    identity = IntMatrix.identity(m).reduce(d).flat()

    elements: t.List[Flat] = [identity]
    index = {identity: 0}
    rows: t.List[t.List[int]] = []

    position = 0
    while position < len(elements):
        current = elements[position]
        row = []
        for generator in generators:
            product = _multiply_mod(current, generator, m, d)
            target = index.get(product)
            if target is None:
                target = len(elements)
                index[product] = target
                elements.append(product)
                if target >= cap:
                    raise EnumerationCapError(
                        f'Image of {preset.name} modulo {d} has more than {cap} elements', cap, len(elements)
                    )
            row.append(target)
        rows.append(row)
        position += 1

    _logger.debug('Image of %s modulo %d has %d elements', preset.name, d, len(elements))

    table = FiniteGroupTable(
        modulus=d,
        degree=m,
        generators=generators,
        weights=preset.step_weights,
        elements=tuple(elements),
        action=np.array(rows, dtype=np.int64),
        exceptional=any(p in preset.exceptional_primes for p in primes),
        preset_name=preset.name,
    )
    if cache is not None:
        cache.set(key, table)

    return table


def ambient_order(preset: 'GroupPreset', d: int) -> t.Optional[int]:
    """Order of the ambient group over ``Z/dZ``; ``None`` for orthogonal ambients."""
    ensure_squarefree(d, minimum=1)
    return preset.ambient.order_mod(d)


@dataclass(frozen=True)
class StrongApproximationReport:
    modulus: int
    image_size: int
    ambient_size: t.Optional[int]

    @property
    def surjective(self) -> t.Optional[bool]:
        """``None`` when the ambient order is unknown."""
        if self.ambient_size is None:
            return None
        return self.image_size == self.ambient_size


def strong_approx_check(
    preset: 'GroupPreset',
    d: int,
    cap: int = _DEFAULT_ENUMERATION_CAP,
    cache: t.Optional['TableBaseCache'] = None,
) -> StrongApproximationReport:
    """Compare the image modulo ``d`` with the ambient group over ``Z/dZ``."""
    table = generate_finite_image(preset, d, cap, cache)
    return StrongApproximationReport(modulus=d, image_size=table.size, ambient_size=ambient_order(preset, d))


@dataclass(frozen=True)
class ExceptionalPrimeScan:
    bound: int
    reports: t.Tuple[StrongApproximationReport, ...]
    skipped: t.Tuple[int, ...]

    @property
    def exceptional_primes(self) -> t.Tuple[int, ...]:
        return tuple(r.modulus for r in self.reports if r.surjective is False)


def discover_exceptional_primes(
    preset: 'GroupPreset',
    bound: int,
    cap: int = _DEFAULT_ENUMERATION_CAP,
    cache: t.Optional['TableBaseCache'] = None,
) -> ExceptionalPrimeScan:
    """Run :func:`strong_approx_check` for every prime ``p <= bound``.

    Primes whose image outgrows ``cap`` are listed in ``skipped`` instead of failing the scan.
    """
    reports = []
    skipped = []
    for p in primes_below(bound + 1):
        try:
            reports.append(strong_approx_check(preset, p, cap, cache))
        except EnumerationCapError:
            _logger.warning('Skipping p=%d: image of %s exceeds the enumeration cap %d', p, preset.name, cap)
            skipped.append(p)

    return ExceptionalPrimeScan(bound=bound, reports=tuple(reports), skipped=tuple(skipped))
