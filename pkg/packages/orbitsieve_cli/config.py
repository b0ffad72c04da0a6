import re
import sys
import typing as t
from pathlib import Path

import typing_extensions as te
from orbitsieve_core.consts import (
    ENUMERATION_CAP,
    FACTORIZATION_MAX_BITS,
    RHO_ITERATION_BUDGET,
    SPECTRAL_MAX_ITERATIONS,
    SPECTRAL_TOLERANCE,
    TRIAL_DIVISION_BOUND,
)
from orbitsieve_core.exactmath import FactorizationEffort, IntMatrix, Polynomial
from orbitsieve_core.exceptions import OrbitSieveError
from orbitsieve_orbits.presets import AmbientGroup, AmbientKind, GroupPreset, get_preset, symmetric_generators
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from orbitsieve_cli.exceptions import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

Command = te.Literal['apollonian', 'strongapprox', 'spectral', 'sieve', 'saturation', 'dt3m', 'baselines']
COMMANDS: t.Tuple[str, ...] = te.get_args(Command)

_TOML_LINE = re.compile(r'line (\d+)')
_TABLE_HEADER = re.compile(r'^\s*\[\[?\s*([A-Za-z_"][A-Za-z0-9_\-. "]*?)\s*\]\]?\s*(#.*)?$')
_KEY = re.compile(r'^\s*([A-Za-z0-9_\-."]+?)\s*=')


class _ConfigModel(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)


class GroupConfig(_ConfigModel):
    """Built-in preset by name, or inline generator matrices.

    Inline generators are completed with the identity and their inverses unless ``add_inverses`` is off, in which
    case the list must already be symmetric and contain the identity.
    """

    preset: t.Optional[str] = 'lubotzky'
    name: str = 'inline'
    generators: t.Optional[t.List[t.List[t.List[int]]]] = None
    ambient: te.Literal['SL', 'Sp', 'O'] = 'SL'
    gram: t.Optional[t.List[t.List[int]]] = None
    add_inverses: bool = True
    exceptional_primes: t.Optional[t.List[int]] = None
    weights: t.Optional[t.List[int]] = None

    @model_validator(mode='after')
    def _check_buildable(self) -> 'GroupConfig':
        try:
            self.build()
        except OrbitSieveError as e:
            raise ValueError(str(e)) from e
        return self

    def _ambient(self, degree: int) -> AmbientGroup:
        if self.ambient == 'SL':
            return AmbientGroup.special_linear(degree)
        if self.ambient == 'Sp':
            return AmbientGroup.symplectic(degree // 2)
        if self.gram is None:
            raise ValueError('An orthogonal ambient group needs a gram matrix')
        return AmbientGroup.orthogonal(IntMatrix.from_rows(self.gram))

    def build(self) -> GroupPreset:
        if self.generators is None:
            if self.preset is None:
                raise ValueError('Either a preset or inline generators are required')
            preset = get_preset(self.preset)
        else:
            matrices = [IntMatrix.from_rows(rows) for rows in self.generators]
            if not matrices:
                raise ValueError('Inline generator list is empty')
            generators = symmetric_generators(matrices) if self.add_inverses else tuple(matrices)
            preset = GroupPreset(self.name, self._ambient(matrices[0].shape[0]), generators)

        if self.weights is not None:
            weights = tuple(self.weights)
            preset = GroupPreset(preset.name, preset.ambient, preset.generators, preset.exceptional_primes, weights)
        if self.exceptional_primes is not None:
            preset = preset.with_exceptional_primes(self.exceptional_primes)
        return preset


class PolynomialConfig(_ConfigModel):
    """Polynomial on orbit points: an expression over ``x0 .. x{m-1}`` (or ``variables``), or sparse ``terms``."""

    expression: t.Optional[str] = 'x0*x1'
    variables: t.Optional[t.List[str]] = None
    terms: t.Optional[t.List[t.Tuple[t.List[int], int]]] = None

    def build(self, nvars: t.Optional[int]) -> Polynomial:
        if self.terms is not None:
            width = nvars or (len(self.terms[0][0]) if self.terms else 1)
            return Polynomial.from_terms(width, self.terms)
        if self.expression is None:
            raise ValueError('Polynomial needs an expression or terms')
        return Polynomial.from_expression(self.expression, nvars=nvars, variables=self.variables)


class EffortConfig(_ConfigModel):
    trial_bound: int = Field(TRIAL_DIVISION_BOUND, ge=2)
    max_bits: int = Field(FACTORIZATION_MAX_BITS, ge=8)
    rho_budget: int = Field(RHO_ITERATION_BUDGET, ge=1)
    enumeration_cap: int = Field(ENUMERATION_CAP, ge=1)
    bfs_cap: int = Field(2_000_000, ge=1)
    divisor_budget: int = Field(2**20, ge=1)
    spectral_tolerance: float = Field(SPECTRAL_TOLERANCE, gt=0)
    spectral_max_iterations: int = Field(SPECTRAL_MAX_ITERATIONS, ge=1)
    monte_carlo_samples: int = Field(20_000, ge=1)

    def factorization(self, seed: int = 0) -> FactorizationEffort:
        return FactorizationEffort(
            trial_bound=self.trial_bound, max_bits=self.max_bits, rho_budget=self.rho_budget, seed=seed
        )


class OutputConfig(_ConfigModel):
    directory: str = 'orbitsieve-out'
    formats: t.List[te.Literal['json', 'csv']] = ['json', 'csv']


class CheckpointConfig(_ConfigModel):
    interval: float = Field(60.0, ge=0)


class ApollonianConfig(_ConfigModel):
    root: t.List[int] = [-6, 11, 14, 15]
    bound: int = Field(1_000, ge=1)
    with_multiplicity: bool = True

    @field_validator('root')
    @classmethod
    def _four_curvatures(cls, v: t.List[int]) -> t.List[int]:
        if len(v) != 4:
            raise ValueError(f'A Descartes quadruple has four curvatures, got {len(v)}')
        return v


class SieveConfig(_ConfigModel):
    source: te.Literal['range', 'file', 'polynomial'] = 'range'
    path: t.Optional[str] = None
    start: int = 1
    stop: int = 10_000
    x: int = Field(10_000, ge=1)
    kappa: float = Field(1.0, ge=0)
    level: t.Optional[float] = None

    @model_validator(mode='after')
    def _path_for_files(self) -> 'SieveConfig':
        if self.source == 'file' and not self.path:
            raise ValueError('A file source needs a path')
        return self


class Dt3mConfig(_ConfigModel):
    preset: str = 'sp4z'

    @field_validator('preset')
    @classmethod
    def _symplectic_preset(cls, v: str) -> str:
        try:
            ambient = get_preset(v).ambient
        except OrbitSieveError as e:
            raise ValueError(str(e)) from e

        # SL_2 and Sp_2 coincide
        special_linear_2 = ambient.kind is AmbientKind.SPECIAL_LINEAR and ambient.degree == 2
        if ambient.kind is AmbientKind.SYMPLECTIC or special_linear_2:
            return v
        raise ValueError(f'Preset {v!r} is not symplectic')


class BaselinesConfig(_ConfigModel):
    x: int = Field(10**5, ge=16)
    kmax: int = Field(5, ge=1)


class RunConfig(_ConfigModel):
    """Validated configuration of one run; it is written verbatim into every artifact it produces."""

    command: t.Optional[Command] = None
    seed: int = Field(0, ge=0, lt=2**64)
    workers: int = Field(1, ge=1)
    resume: t.Optional[str] = None
    group: GroupConfig = GroupConfig()
    polynomial: PolynomialConfig = PolynomialConfig()
    x0: t.List[int] = [1, 2]
    prime_range: t.Tuple[int, int] = (2, 13)
    moduli: t.List[int] = []
    z: float = Field(30.0, gt=1)
    steps: t.List[te.Annotated[int, Field(ge=0)]] = [20]
    samples: int = Field(1_000, ge=1)
    r: t.List[te.Annotated[int, Field(ge=0)]] = [5, 10, 15, 20, 25]
    effort: EffortConfig = EffortConfig()
    output: OutputConfig = OutputConfig()
    checkpoint: CheckpointConfig = CheckpointConfig()
    apollonian: ApollonianConfig = ApollonianConfig()
    sieve: SieveConfig = SieveConfig()
    dt3m: Dt3mConfig = Dt3mConfig()
    baselines: BaselinesConfig = BaselinesConfig()

    def metadata(self) -> t.Dict[str, t.Any]:
        """Config as written into artifacts; scheduling options that never change results are left out."""
        return self.model_dump(mode='json', exclude={'workers', 'resume'})


def _line_paths(text: str) -> t.Iterator[t.Tuple[int, str]]:
    table = ''
    for number, line in enumerate(text.splitlines(), start=1):
        header = _TABLE_HEADER.match(line)
        if header:
            table = header.group(1).replace('"', '')
            yield number, table
            continue

        key = _KEY.match(line)
        if key:
            name = key.group(1).replace('"', '')
            yield number, f'{table}.{name}' if table else name


def _locate(text: str, loc: t.Sequence[t.Union[str, int]]) -> t.Optional[int]:
    """First line defining the longest prefix of the pydantic error location ``loc``."""
    names = [part for part in loc if isinstance(part, str)]
    paths = list(_line_paths(text))
    for size in range(len(names), 0, -1):
        target = '.'.join(names[:size])
        for number, path in paths:
            if path == target:
                return number
    return None


def load_config(
    path: t.Optional[t.Union[str, Path]],
    command: str,
    overrides: t.Optional[t.Mapping[str, t.Any]] = None,
) -> RunConfig:
    """Read and validate a TOML run configuration, then apply command-line overrides.

    Args:
        path: TOML file; ``None`` uses the defaults.
        command: Subcommand being run.
        overrides: ``seed``, ``out``, ``workers`` and ``resume`` from the command line; ``None`` values are ignored.

    Returns:
        :obj:`RunConfig`: Validated configuration.

    Raises:
        :obj:`ConfigError`: The file can't be read or parsed, or a value is invalid. The message starts with
            ``path:line:`` when the line is known.
    """
    text = ''
    data: t.Dict[str, t.Any] = {}
    source = str(path) if path is not None else '<defaults>'
    if path is not None:
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise ConfigError(f"{source}: can't read config: {e}") from e

        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as e:
            match = _TOML_LINE.search(str(e))
            line = int(match.group(1)) if match else None
            raise ConfigError(f'{source}:{line or "?"}: {e}', line) from e

    declared = data.get('command')
    if declared is not None and declared != command:
        line = _locate(text, ('command',))
        raise ConfigError(f'{source}:{line}: config is for {declared!r}, not {command!r}', line)
    data['command'] = command

    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    if 'out' in overrides:
        data['output'] = {**data.get('output', {}), 'directory': str(overrides.pop('out'))}
    data.update(overrides)

    try:
        config = RunConfig.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        line = _locate(text, error['loc'])
        where = '.'.join(str(part) for part in error['loc']) or 'config'
        raise ConfigError(f'{source}:{line or "?"}: {where}: {error["msg"]}', line) from e

    _check_consistency(config, text, source)
    return config


def polynomial_arity(config: RunConfig) -> t.Optional[int]:
    """Number of variables the command evaluates the polynomial in, ``None`` when it uses none."""
    if config.command == 'saturation':
        return len(config.x0)
    if config.command == 'sieve' and config.sieve.source == 'polynomial':
        return 1
    return None


def _error(source: str, text: str, loc: t.Sequence[t.Union[str, int]], message: str) -> ConfigError:
    line = _locate(text, loc)
    return ConfigError(f'{source}:{line or "?"}: {message}', line)


def _check_consistency(config: RunConfig, text: str, source: str) -> None:
    nvars = polynomial_arity(config)
    if nvars is None:
        return

    if config.command == 'saturation':
        degree = config.group.build().degree
        if len(config.x0) != degree:
            raise _error(source, text, ('x0',), f'x0 has {len(config.x0)} entries, the group acts on {degree}')

    try:
        polynomial = config.polynomial.build(nvars)
    except (OrbitSieveError, ValueError) as e:
        raise _error(source, text, ('polynomial',), f'polynomial: {e}') from e

    if polynomial.nvars != nvars:
        message = f'polynomial has {polynomial.nvars} variables, expected {nvars}'
        raise _error(source, text, ('polynomial',), message)
