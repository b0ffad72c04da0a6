import logging
import time
import typing as t
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from orbitsieve_apollonian import (
    DescartesQuadruple,
    curvature_counts,
    enumerate_packing,
    read_checkpoint,
    reduce_to_root,
    write_checkpoint,
    write_snapshot,
)
from orbitsieve_core.exactmath import primes_below
from orbitsieve_dt3m import dt_dimension_fit, homology_statistics, infinite_fraction_rate, sifting_rate
from orbitsieve_orbits import (
    WalkEnsemble,
    generate_finite_image,
    get_preset,
    measure_growth_rate,
    read_walk_snapshot,
    sample_walk,
    strong_approx_check,
    write_walk_snapshot,
)
from orbitsieve_orbits.exceptions import EnumerationCapError
from orbitsieve_sieve import (
    LocalDensity,
    SieveSequence,
    almost_prime_counts,
    dimension_estimate,
    hardy_ramanujan_variance,
    large_sieve_mass,
    legendre_sift,
    level_ledger,
    local_density,
    observe_omega,
    omega_table,
    orbit_zero_predicate,
    polynomial_densities,
    prime_count_check,
    saturation_table,
    sifted_bracket,
    zero_set_bound,
)
from orbitsieve_sieve.exceptions import InsufficientDataError
from orbitsieve_spectral import spectral_row, uniform_rho

from orbitsieve_cli.config import RunConfig, polynomial_arity
from orbitsieve_cli.reports import ReportMetadata, write_csv, write_json

if t.TYPE_CHECKING:
    from orbitsieve_core.exactmath import Polynomial
    from orbitsieve_orbits import GroupPreset

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID_CONFIG = 2
EXIT_INCOMPLETE = 3

_T = t.TypeVar('_T')


@dataclass
class RunOutcome:
    status: int = EXIT_OK
    artifacts: t.List[Path] = field(default_factory=list)

    @property
    def incomplete(self) -> bool:
        return self.status == EXIT_INCOMPLETE

    def flag_incomplete(self, reason: str) -> None:
        _logger.warning('Incomplete: %s', reason)
        self.status = EXIT_INCOMPLETE


class _Throttle(t.Generic[_T]):
    """Call ``action`` at most once per ``interval`` seconds of wall-clock time."""

    def __init__(self, interval: float, action: t.Callable[[_T], None]) -> None:
        self._interval = interval
        self._action = action
        self._last = time.monotonic()

    def __call__(self, state: _T) -> None:
        now = time.monotonic()
        if now - self._last >= self._interval:
            self._action(state)
            self._last = now


class _Writer:
    def __init__(self, config: RunConfig, outcome: RunOutcome) -> None:
        self._config = config
        self._outcome = outcome
        self._metadata = ReportMetadata.from_config(config)
        self.directory = Path(config.output.directory)

    def json(self, name: str, report: t.Mapping[str, t.Any]) -> None:
        if 'json' in self._config.output.formats:
            payload = {**report, 'complete': not self._outcome.incomplete}
            self._outcome.artifacts.append(write_json(self.directory / f'{name}.json', self._metadata, payload))

    def csv(self, name: str, header: t.Sequence[str], rows: t.Iterable[t.Sequence[t.Any]]) -> None:
        if 'csv' in self._config.output.formats:
            self._outcome.artifacts.append(write_csv(self.directory / f'{name}.csv', self._metadata, header, rows))


def _prime_range(config: RunConfig) -> t.List[int]:
    low, high = config.prime_range
    return [p for p in primes_below(high + 1) if p >= low]


def _counting_densities(primes: t.Iterable[int]) -> t.List[LocalDensity]:
    """``ν_p = 1/p``: the share of integers divisible by ``p``."""
    return [LocalDensity.uniform(p, 1, p) for p in primes]


def _run_apollonian(config: RunConfig, outcome: RunOutcome, writer: _Writer) -> None:
    settings = config.apollonian
    root = reduce_to_root(DescartesQuadruple.from_sequence(settings.root))
    checkpoint_path = writer.directory / 'packing.checkpoint.json'
    writer.directory.mkdir(parents=True, exist_ok=True)

    resume = read_checkpoint(config.resume) if config.resume else None
    packing = enumerate_packing(
        root,
        settings.bound,
        max_quadruples=config.effort.bfs_cap,
        checkpoint=_Throttle(config.checkpoint.interval, lambda state: write_checkpoint(state, checkpoint_path)),
        resume=resume,
    )
    if not packing.complete:
        outcome.flag_incomplete(f'packing stopped at {len(packing.quadruples)} quadruples')
    write_snapshot(packing, writer.directory / 'packing.txt')
    outcome.artifacts.append(writer.directory / 'packing.txt')

    sequence = SieveSequence.from_packing(packing, settings.with_multiplicity)
    sift = legendre_sift(sequence, None, config.z, config.effort.divisor_budget)
    if sift.budget_exceeded:
        outcome.flag_incomplete('inclusion-exclusion skipped: divisor budget exceeded')

    effort = config.effort.factorization(config.seed)
    omegas: t.Counter[int] = Counter()
    unfactored = 0
    for item in sequence.positive:
        observation = observe_omega(item.value, effort)
        if observation.complete:
            omegas[observation.omega] += 1
        else:
            unfactored += 1
    if unfactored:
        outcome.flag_incomplete(f'{unfactored} curvatures left partially factored')

    counts = curvature_counts(packing, settings.with_multiplicity)
    writer.csv('curvatures', ['curvature', 'count'], sorted(counts.items()))
    writer.json(
        'apollonian',
        {
            'root': list(root.as_tuple()),
            'bound': packing.bound,
            'quadruples': len(packing.quadruples),
            'circles': len(packing.curvatures),
            'distinct_curvatures': len(counts),
            'sift': sift,
            'zero_mass': sequence.zero_mass,
            'omega_histogram': dict(sorted(omegas.items())),
            'unfactored': unfactored,
        },
    )


def _run_strongapprox(config: RunConfig, outcome: RunOutcome, writer: _Writer) -> None:
    preset = config.group.build()
    rows = []
    skipped = []
    for d in _prime_range(config) + sorted(set(config.moduli)):
        try:
            rows.append(strong_approx_check(preset, d, config.effort.enumeration_cap))
        except EnumerationCapError:
            skipped.append(d)
    if skipped:
        outcome.flag_incomplete(f'images modulo {skipped} exceed the enumeration cap')

    failures = [r.modulus for r in rows if r.surjective is False]
    columns = ['modulus', 'image_size', 'ambient_size', 'surjective']
    table = [(r.modulus, r.image_size, r.ambient_size, r.surjective) for r in rows]
    writer.csv('strongapprox', columns, table)
    json_rows = [dict(zip(columns, row)) for row in table]
    writer.json('strongapprox', {'preset': preset.name, 'rows': json_rows, 'failures': failures, 'skipped': skipped})


def _run_spectral(config: RunConfig, outcome: RunOutcome, writer: _Writer) -> None:
    preset = config.group.build()
    effort = config.effort
    rows = []
    skipped = []
    for d in _prime_range(config) + sorted(set(config.moduli)):
        try:
            row = spectral_row(
                preset, d, effort.enumeration_cap, effort.spectral_tolerance, effort.spectral_max_iterations
            )
        except EnumerationCapError:
            skipped.append(d)
            continue
        if not row.converged:
            outcome.flag_incomplete(f'spectral iteration did not converge for d={d}')
        rows.append(row)
    if skipped:
        outcome.flag_incomplete(f'images modulo {skipped} exceed the enumeration cap')

    writer.csv(
        'spectral',
        ['modulus', 'size', 'rho0', 'diameter', 'girth_lower_bound', 'converged'],
        [(r.modulus, r.size, r.rho0, r.diameter, r.girth_lower_bound, r.converged) for r in rows],
    )
    writer.json('spectral', {'preset': preset.name, 'rows': rows, 'uniform_rho': uniform_rho(rows), 'skipped': skipped})


def _sieve_sequence(config: RunConfig) -> SieveSequence:
    settings = config.sieve
    if settings.source == 'file':
        assert settings.path is not None
        return SieveSequence.from_integer_file(settings.path)
    if settings.source == 'polynomial':
        return SieveSequence.from_polynomial(config.polynomial.build(1), settings.x)
    return SieveSequence.from_range(settings.start, settings.stop)


def _run_sieve(config: RunConfig, outcome: RunOutcome, writer: _Writer) -> None:
    settings = config.sieve
    sequence = _sieve_sequence(config)

    sift = legendre_sift(sequence, None, config.z, config.effort.divisor_budget)
    if sift.budget_exceeded:
        outcome.flag_incomplete('inclusion-exclusion skipped: divisor budget exceeded')

    density_bound = max(config.z, settings.level or 0.0)
    if settings.source == 'polynomial':
        densities = polynomial_densities(config.polynomial.build(1), density_bound)
    else:
        densities = _counting_densities(primes_below(density_bound + 1))

    try:
        fit = dimension_estimate(densities)
    except InsufficientDataError as e:
        _logger.info('No dimension fit: %s', e)
        fit = None

    ledger_summary = None
    if settings.level is not None:
        ledger = level_ledger(sequence, densities, settings.level, divisor_budget=config.effort.divisor_budget)
        writer.csv(
            'remainders',
            ['d', 'congruence_sum', 'density', 'remainder'],
            [(r.d, r.congruence_sum, r.density, r.remainder) for r in ledger.remainders],
        )
        ledger_summary = {
            'cutoff': ledger.cutoff,
            'moduli': len(ledger.remainders),
            'aggregate': ledger.aggregate,
            'max_remainder': ledger.max_remainder,
            'delta': ledger.delta,
            'delta_1': ledger.delta_1,
        }

    writer.csv(
        'densities',
        ['prime', 'omega_size', 'group_size', 'density'],
        [(d.prime, d.omega_size, d.group_size, d.density) for d in densities],
    )
    writer.json(
        'sieve',
        {
            'source': settings.source,
            'items': len(sequence),
            'total_mass': sequence.total_mass,
            'zero_mass': sequence.zero_mass,
            'sift': sift,
            'bracket': sifted_bracket(sequence, densities, config.z, settings.kappa),
            'large_sieve': large_sieve_mass(densities, config.z),
            'dimension_fit': fit,
            'ledger': ledger_summary,
        },
    )


def _ensembles(config: RunConfig, preset: 'GroupPreset', writer: _Writer) -> t.Iterator[WalkEnsemble]:
    resume = read_walk_snapshot(config.resume, preset) if config.resume else None
    writer.directory.mkdir(parents=True, exist_ok=True)

    for steps in sorted(set(config.steps)):
        path = writer.directory / f'walk-k{steps}.checkpoint.json'
        yield sample_walk(
            preset,
            steps,
            config.samples,
            config.seed,
            workers=config.workers,
            checkpoint=_Throttle(config.checkpoint.interval, lambda ensemble, p=path: write_walk_snapshot(ensemble, p)),
            resume=resume if resume is not None and resume.steps == steps else None,
        )


def _orbit_densities(config: RunConfig, preset: 'GroupPreset', f: 'Polynomial') -> t.List[LocalDensity]:
    """Exact ``ν_p(f(γ · x0) ≡ 0)`` for the primes ``p < z`` up to the first image above the enumeration cap."""
    cap = config.effort.enumeration_cap
    densities = []
    for p in primes_below(config.z):
        order = preset.ambient.order_mod_prime(p)
        if order is not None and order > cap:
            break
        try:
            table = generate_finite_image(preset, p, cap)
        except EnumerationCapError:
            _logger.info('Orbit densities stop at p=%d: image of %s exceeds the cap', p, preset.name)
            break
        densities.append(local_density(table, orbit_zero_predicate(config.x0, f, p)))
    return densities


def _run_saturation(config: RunConfig, outcome: RunOutcome, writer: _Writer) -> None:
    preset = config.group.build()
    f = config.polynomial.build(polynomial_arity(config))
    effort = config.effort.factorization(config.seed)
    densities = _orbit_densities(config, preset, f)

    rows = []
    growth = []
    zero_set = []
    for ensemble in _ensembles(config, preset, writer):
        rows.extend(saturation_table([ensemble], config.x0, f, config.r, effort, config.workers))
        growth.append(measure_growth_rate(ensemble, config.x0, f))
        bound = zero_set_bound(SieveSequence.from_ensemble(ensemble, config.x0, f), densities)
        zero_set.append({'steps': ensemble.steps, 'bound': bound})

    unfactored = max((row.unfactored for row in rows), default=0)
    if unfactored:
        outcome.flag_incomplete(f'up to {unfactored} orbit values per walk length left partially factored')

    writer.csv(
        'saturation',
        ['steps', 'r', 'lower', 'upper', 'zero_fraction', 'unfactored', 'standard_error'],
        [(r.steps, r.r, r.lower, r.upper, r.zero_fraction, r.unfactored, r.standard_error) for r in rows],
    )
    writer.json(
        'saturation',
        {'preset': preset.name, 'polynomial': str(f), 'rows': rows, 'growth': growth, 'zero_set': zero_set},
    )


def _run_dt3m(config: RunConfig, outcome: RunOutcome, writer: _Writer) -> None:
    preset = get_preset(config.dt3m.preset)
    genus = preset.degree // 2
    effort = config.effort.factorization(config.seed)

    statistics = []
    sample_rows = []
    for ensemble in _ensembles(config, preset, writer):
        stats = homology_statistics(ensemble, config.z, effort, config.workers)
        statistics.append(stats)
        sample_rows.extend(
            (row.steps, row.index, row.finite, row.torsion_order, row.omega, row.small_primes) for row in stats.rows
        )
        if any(row.finite and row.omega is None for row in stats.rows):
            outcome.flag_incomplete(f'torsion orders at k={stats.steps} left partially factored')

    try:
        fit = dt_dimension_fit(
            genus,
            _prime_range(config),
            config.effort.enumeration_cap,
            config.effort.monte_carlo_samples,
            config.seed,
        )
    except InsufficientDataError as e:
        _logger.info('No dimension fit: %s', e)
        fit = None

    writer.csv('dt3m', ['steps', 'index', 'finite', 'torsion_order', 'omega', 'small_primes'], sample_rows)
    writer.json(
        'dt3m',
        {
            'preset': preset.name,
            'genus': genus,
            'z': config.z,
            'by_steps': [
                {
                    'steps': s.steps,
                    'infinite_fraction': s.infinite_fraction,
                    'standard_error': s.standard_error,
                    'sifted_fraction': s.sifted_fraction,
                }
                for s in statistics
            ],
            'infinite_fraction_rate': infinite_fraction_rate(statistics),
            'sifting_rate': sifting_rate(statistics),
            'densities': [
                {
                    'prime': d.prime,
                    'density': d.density,
                    'closed_form': d.closed_form,
                    'exact': d.exact,
                    'interval': d.interval,
                }
                for d in (fit.densities if fit else ())
            ],
            'dimension_fit': fit,
        },
    )


def _run_baselines(config: RunConfig, outcome: RunOutcome, writer: _Writer) -> None:
    x = config.baselines.x
    table = omega_table(x)
    counts = almost_prime_counts(x, config.baselines.kmax, table)

    writer.csv('almost_primes', ['k', 'count', 'prediction'], [(c.k, c.count, c.prediction) for c in counts])
    writer.json(
        'baselines',
        {
            'x': x,
            'hardy_ramanujan': hardy_ramanujan_variance(x, table),
            'prime_count': prime_count_check(x),
            'almost_primes': counts,
        },
    )


_RUNNERS: t.Dict[str, t.Callable[[RunConfig, RunOutcome, _Writer], None]] = {
    'apollonian': _run_apollonian,
    'strongapprox': _run_strongapprox,
    'spectral': _run_spectral,
    'sieve': _run_sieve,
    'saturation': _run_saturation,
    'dt3m': _run_dt3m,
    'baselines': _run_baselines,
}


def run(config: RunConfig) -> RunOutcome:
    """Execute the configured command and write its reports.

    Returns:
        :obj:`RunOutcome`: Exit status (``EXIT_OK`` or ``EXIT_INCOMPLETE``) and the written artifacts.
    """
    if config.command is None:
        raise ValueError('RunConfig has no command')

    outcome = RunOutcome()
    _logger.info('Running %s with seed %d', config.command, config.seed)
    _RUNNERS[config.command](config, outcome, _Writer(config, outcome))
    return outcome
