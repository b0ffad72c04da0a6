import functools
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
from orbitsieve_core.exactmath import Polynomial

from orbitsieve_sieve.exceptions import SequenceFileError

if t.TYPE_CHECKING:
    from orbitsieve_apollonian.packing import Packing
    from orbitsieve_orbits.walks import WalkEnsemble

_INT64_LIMIT = 2**62

Label = t.Union[int, str]


@dataclass(frozen=True)
class SieveItem:
    label: Label
    value: int
    weight: Fraction


@dataclass(frozen=True)
class SieveSequence:
    """Finite measured family ``y -> (n(y), weight)``.

    Values are stored as ``n(y) = |value|``. Items with ``n(y) = 0`` form the zero set, which is kept apart:
    congruence sums, sifted counts and the total mass only run over items with ``n(y) >= 1``.
    """

    items: t.Tuple[SieveItem, ...]

    def __post_init__(self) -> None:
        if any(item.weight < 0 for item in self.items):
            raise ValueError('Sieve weights must be non-negative')

    @classmethod
    def from_values(
        cls,
        values: t.Iterable[int],
        weights: t.Optional[t.Iterable[t.Union[int, Fraction]]] = None,
        labels: t.Optional[t.Iterable[Label]] = None,
    ) -> 'SieveSequence':
        values = [abs(int(v)) for v in values]
        weights = [Fraction(w) for w in weights] if weights is not None else [Fraction(1)] * len(values)
        labels = list(labels) if labels is not None else list(range(len(values)))
        if not len(values) == len(weights) == len(labels):
            raise ValueError('Values, weights and labels must have equal lengths')

        return cls(tuple(SieveItem(label, value, weight) for label, value, weight in zip(labels, values, weights)))

    @classmethod
    def from_range(cls, start: int, stop: int) -> 'SieveSequence':
        """Counting measure on ``start <= n <= stop`` with ``n(y) = y``."""
        values = list(range(start, stop + 1))
        return cls.from_values(values, labels=values)

    @classmethod
    def from_integer_file(cls, path: t.Union[str, Path]) -> 'SieveSequence':
        """Integers separated by whitespace; ``#`` starts a comment."""
        values = []
        with open(path, encoding='utf-8') as f:
            for number, line in enumerate(f, start=1):
                for token in line.split('#', 1)[0].split():
                    try:
                        values.append(int(token))
                    except ValueError as e:
                        raise SequenceFileError(f'{path}, line {number}: {token!r} is not an integer') from e
        return cls.from_values(values)

    @classmethod
    def from_polynomial(cls, f: Polynomial, x: int) -> 'SieveSequence':
        """Values ``f(m)`` for ``1 <= m <= x`` with unit weights."""
        return cls.from_values((f.evaluate((m,)) for m in range(1, x + 1)), labels=range(1, x + 1))

    @classmethod
    def from_packing(cls, packing: 'Packing', with_multiplicity: bool = True) -> 'SieveSequence':
        curvatures = packing.curvatures if with_multiplicity else sorted(set(packing.curvatures))
        return cls.from_values(curvatures)

    @classmethod
    def from_ensemble(cls, ensemble: 'WalkEnsemble', x0: t.Sequence[int], f: Polynomial) -> 'SieveSequence':
        """Orbit values ``f(γ · x0)`` of the walk samples, one unit-weight item per sample."""
        return cls.from_values(f.evaluate(g.apply(x0)) for g in ensemble.samples)

    def __len__(self) -> int:
        return len(self.items)

    @functools.cached_property
    def positive(self) -> t.Tuple[SieveItem, ...]:
        return tuple(item for item in self.items if item.value >= 1)

    @functools.cached_property
    def zero_set(self) -> t.Tuple[SieveItem, ...]:
        return tuple(item for item in self.items if item.value == 0)

    @property
    def total_mass(self) -> Fraction:
        return self._mass(np.ones(len(self.positive), dtype=bool))

    @property
    def zero_mass(self) -> Fraction:
        return sum((item.weight for item in self.zero_set), Fraction(0))

    @functools.cached_property
    def _values(self) -> np.ndarray:
        values = [item.value for item in self.positive]
        if all(v < _INT64_LIMIT for v in values):
            return np.array(values, dtype=np.int64)
        return np.array(values, dtype=object)

    @functools.cached_property
    def _scaled_weights(self) -> t.Tuple[np.ndarray, int]:
        denominator = 1
        for item in self.positive:
            denominator = denominator * item.weight.denominator // math.gcd(denominator, item.weight.denominator)

        scaled = [item.weight.numerator * (denominator // item.weight.denominator) for item in self.positive]
        dtype = np.int64 if all(w < _INT64_LIMIT // max(len(scaled), 1) for w in scaled) else object
        return np.array(scaled, dtype=dtype), denominator

    def _mass(self, mask: np.ndarray) -> Fraction:
        weights, denominator = self._scaled_weights
        return Fraction(int(weights[mask].sum()), denominator)

    def divisible_mask(self, d: int) -> np.ndarray:
        """Items of positive value divisible by ``d``."""
        values = self._values
        if values.dtype == object or d >= _INT64_LIMIT:
            return np.array([v % d == 0 for v in values], dtype=bool)
        return values % d == 0

    def mass_where(self, mask: np.ndarray) -> Fraction:
        return self._mass(mask)
