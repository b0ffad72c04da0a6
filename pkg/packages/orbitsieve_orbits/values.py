import math
import typing as t
from dataclasses import dataclass

from orbitsieve_core.exactmath import IntMatrix, Polynomial

if t.TYPE_CHECKING:
    from orbitsieve_orbits.walks import WalkEnsemble


def orbit_value(g: IntMatrix, x0: t.Sequence[int], f: Polynomial) -> int:
    """Exact value ``f(g · x0)``.

    Raises:
        :obj:`DimensionMismatchError`: ``g``, ``x0`` and ``f`` disagree on the dimension.
    """
    return f.evaluate(g.apply(x0))


@dataclass(frozen=True)
class GrowthRate:
    """Empirical per-step growth of ``|f(γ · x0)|`` along walk samples.

    ``rate`` is the geometric mean of ``|f(γ · x0)|^(1/k)`` over the samples with a non-zero value, or
    ``None`` when there is nothing to average.
    """

    steps: int
    rate: t.Optional[float]
    used: int
    zeros: int


def measure_growth_rate(ensemble: 'WalkEnsemble', x0: t.Sequence[int], f: Polynomial) -> GrowthRate:
    logs = []
    zeros = 0
    for g in ensemble.samples:
        value = orbit_value(g, x0, f)
        if value == 0:
            zeros += 1
        else:
            logs.append(math.log(abs(value)))

    if not logs or ensemble.steps == 0:
        return GrowthRate(steps=ensemble.steps, rate=None, used=len(logs), zeros=zeros)

    rate = math.exp(math.fsum(logs) / (len(logs) * ensemble.steps))
    return GrowthRate(steps=ensemble.steps, rate=rate, used=len(logs), zeros=zeros)
