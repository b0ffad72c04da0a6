import logging
import typing as t
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from orbitsieve_core.exactmath import IntMatrix

from orbitsieve_orbits.exceptions import EnumerationCapError, WalkSnapshotError

if t.TYPE_CHECKING:
    from orbitsieve_orbits.finite import FiniteGroupTable
    from orbitsieve_orbits.presets import GroupPreset

_logger = logging.getLogger(__name__)

_DEFAULT_CHUNK_SIZE = 1_000
_DEFAULT_SUPPORT_CAP = 1_000_000


def sample_seed(seed: int, index: int) -> int:
    """64-bit sub-seed of sample ``index``; it depends on nothing but ``(seed, index)``."""
    state = np.random.SeedSequence([seed, index]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def _sample_rng(sub_seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(sub_seed))


def _step_indices(preset: 'GroupPreset', steps: int, rng: np.random.Generator) -> np.ndarray:
    if preset.is_uniform:
        return rng.integers(0, preset.size, size=steps)

    weights = np.array(preset.step_weights, dtype=np.float64)
    return rng.choice(preset.size, size=steps, p=weights / weights.sum())


def _walk(preset: 'GroupPreset', steps: int, sub_seed: int) -> IntMatrix:
    position = IntMatrix.identity(preset.degree)
    for s in _step_indices(preset, steps, _sample_rng(sub_seed)):
        position = position @ preset.generators[int(s)]
    return position


def _sample_chunk(preset: 'GroupPreset', steps: int, seed: int, indices: t.Sequence[int]) -> t.List[IntMatrix]:
    return [_walk(preset, steps, sample_seed(seed, i)) for i in indices]


@dataclass(frozen=True)
class WalkEnsemble:
    """Seeded samples of the ``steps``-th position of the random walk on a preset.

    Sample ``i`` is fully determined by ``(seed, i)``, so an ensemble regenerates exactly and does not depend
    on how sampling was split across workers. ``samples`` may be shorter than ``size`` while sampling is in
    progress.
    """

    preset: 'GroupPreset'
    steps: int
    size: int
    seed: int
    samples: t.Tuple[IntMatrix, ...] = field(default_factory=tuple)

    @property
    def complete(self) -> bool:
        return len(self.samples) == self.size

    @property
    def sub_seeds(self) -> t.Tuple[int, ...]:
        return tuple(sample_seed(self.seed, i) for i in range(self.size))

    def reduced(self, d: int) -> t.List[IntMatrix]:
        return [g.reduce(d) for g in self.samples]


WalkCheckpointCallback = t.Callable[[WalkEnsemble], None]


def sample_walk(
    preset: 'GroupPreset',
    steps: int,
    size: int,
    seed: int,
    workers: int = 1,
    chunk_size: int = _DEFAULT_CHUNK_SIZE,
    checkpoint: t.Optional[WalkCheckpointCallback] = None,
    resume: t.Optional[WalkEnsemble] = None,
) -> WalkEnsemble:
    """Sample ``size`` independent ``steps``-step walks ``s_1 · … · s_k``.

    Steps are drawn from the generator multiset, uniformly or according to the preset weights, with a Philox
    generator keyed per sample.

    Args:
        preset: Group preset.
        steps: Walk length ``k >= 0``.
        size: Number of samples ``N >= 1``.
        seed: Master seed.
        workers: Worker processes; ``1`` samples inline.
        chunk_size: Samples per task and per checkpoint.
        checkpoint: Called with the partial ensemble after every chunk.
        resume: Partial ensemble to continue.

    Returns:
        :obj:`WalkEnsemble`: Complete ensemble.
    """
    if steps < 0 or size < 1:
        raise ValueError(f'Walks need steps >= 0 and size >= 1, got steps={steps}, size={size}')

    samples: t.List[IntMatrix] = []
    if resume is not None:
        if (resume.preset.digest(), resume.steps, resume.size, resume.seed) != (preset.digest(), steps, size, seed):
            raise WalkSnapshotError('Resumed ensemble was sampled with different parameters')
        samples.extend(resume.samples)

    chunks = [list(range(start, min(start + chunk_size, size))) for start in range(len(samples), size, chunk_size)]

    def collect(chunk: t.List[IntMatrix]) -> None:
        samples.extend(chunk)
        _logger.debug('Sampled %d/%d walks of length %d', len(samples), size, steps)
        if checkpoint is not None:
            checkpoint(WalkEnsemble(preset, steps, size, seed, tuple(samples)))

    if workers <= 1:
        for indices in chunks:
            collect(_sample_chunk(preset, steps, seed, indices))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            n = len(chunks)
            for chunk in executor.map(_sample_chunk, [preset] * n, [steps] * n, [seed] * n, chunks):
                collect(chunk)

    return WalkEnsemble(preset, steps, size, seed, tuple(samples))


def exact_walk_masses(
    preset: 'GroupPreset', steps: int, support_cap: int = _DEFAULT_SUPPORT_CAP
) -> t.Dict[IntMatrix, Fraction]:
    """Exact law of the ``steps``-th walk position, by expanding every word.

    Returns:
        :obj:`dict`: Matrix to probability; masses sum to ``1``.

    Raises:
        :obj:`EnumerationCapError`: The support outgrows ``support_cap``.
    """
    weights = preset.step_weights
    total = sum(weights)
    step_masses = [Fraction(w, total) for w in weights]

    masses: t.Dict[IntMatrix, Fraction] = {IntMatrix.identity(preset.degree): Fraction(1)}
    for _ in range(steps):
        following: t.Dict[IntMatrix, Fraction] = {}
        for position, mass in masses.items():
            for generator, step_mass in zip(preset.generators, step_masses):
                target = position @ generator
                following[target] = following.get(target, Fraction(0)) + mass * step_mass
        if len(following) > support_cap:
            raise EnumerationCapError(f'Walk support exceeds {support_cap} elements', support_cap, len(following))
        masses = following

    return masses


def reduced_walk_indices(ensemble: WalkEnsemble, table: 'FiniteGroupTable') -> t.List[t.Optional[int]]:
    """Table index of every sample reduced modulo ``table.modulus`` (``None`` outside the table)."""
    return [table.index_of(g) for g in ensemble.samples]
