import logging
import typing as t

import click
from orbitsieve_core.exceptions import OrbitSieveError

from orbitsieve_cli.config import load_config
from orbitsieve_cli.exceptions import ConfigError
from orbitsieve_cli.runner import EXIT_FAILED, EXIT_INCOMPLETE, EXIT_INVALID_CONFIG, run

_F = t.TypeVar('_F', bound=t.Callable[..., t.Any])


class AliasedGroup(click.Group):
    """Ref: https://click.palletsprojects.com/en/8.1.x/advanced/."""

    def get_command(self, ctx: click.Context, cmd_name: str) -> t.Optional[click.Command]:
        rv = click.Group.get_command(self, ctx, cmd_name)
        if rv is not None:
            return rv

        matches = [x for x in self.list_commands(ctx) if x.startswith(cmd_name)]
        if not matches:
            return None
        if len(matches) == 1:
            return click.Group.get_command(self, ctx, matches[0])

        ctx.fail(f'Too many matches: {", ".join(sorted(matches))}')
        return None

    def resolve_command(
        self, ctx: click.Context, args: t.List[str]
    ) -> t.Tuple[t.Optional[str], t.Optional[click.Command], t.List[str]]:
        # always return the full command name
        _, cmd, args = super().resolve_command(ctx, args)
        return (cmd.name if cmd else None), cmd, args


def echo(ctx: click.Context, *args: t.Any) -> None:
    if not ctx.obj.get('silent'):
        click.echo(*args)


def run_options(f: _F) -> _F:
    """Options shared by every experiment command."""
    options = [
        click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None),
        click.option('--seed', type=click.IntRange(0, 2**64 - 1), default=None, help='Master seed.'),
        click.option('--out', type=click.Path(file_okay=False), default=None, help='Output directory.'),
        click.option('--workers', type=click.IntRange(min=1), default=None, help='Worker processes.'),
        click.option(
            '--resume',
            type=click.Path(exists=True, dir_okay=False),
            default=None,
            help='Walk or packing checkpoint to continue from.',
        ),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _execute(ctx: click.Context, command: str, config_path: t.Optional[str], **overrides: t.Any) -> None:
    try:
        config = load_config(config_path, command, overrides)
    except ConfigError as e:
        click.secho(str(e), fg='red', err=True)
        ctx.exit(EXIT_INVALID_CONFIG)

    echo(ctx, f'Running {command}...')
    try:
        outcome = run(config)
    except OrbitSieveError as e:
        click.secho(f'{command} failed: {e}', fg='red', err=True)
        ctx.exit(EXIT_FAILED)

    for path in outcome.artifacts:
        echo(ctx, f'- {path}')

    if outcome.status == EXIT_INCOMPLETE:
        click.secho('Effort bounds were hit; the outputs are flagged incomplete.', fg='yellow', err=True)
    else:
        echo(ctx, 'Done!')
    ctx.exit(outcome.status)


@click.group(cls=AliasedGroup)
@click.option('--silent', '-s', is_flag=True, default=False, help='Disable output.')
@click.option('--verbose', '-v', is_flag=True, default=False, help='Log debug messages.')
@click.pass_context
def orbitsieve_cli(ctx: click.Context, silent: bool, verbose: bool) -> None:
    """Sieve experiments on orbits of thin matrix groups."""
    ctx.ensure_object(dict)
    ctx.obj['silent'] = silent

    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif silent:
        level = logging.WARNING
    logging.basicConfig(level=level)


@orbitsieve_cli.command(help='Enumerate an Apollonian packing and sieve its curvatures.')
@run_options
@click.pass_context
def apollonian(ctx: click.Context, config_path: t.Optional[str], **overrides: t.Any) -> None:
    _execute(ctx, 'apollonian', config_path, **overrides)


@orbitsieve_cli.command(help='Compare finite images with the ambient group and list the failing moduli.')
@run_options
@click.pass_context
def strongapprox(ctx: click.Context, config_path: t.Optional[str], **overrides: t.Any) -> None:
    _execute(ctx, 'strongapprox', config_path, **overrides)


@orbitsieve_cli.command(help='Tabulate the mean-zero spectral radius of Cayley graphs over a prime range.')
@run_options
@click.pass_context
def spectral(ctx: click.Context, config_path: t.Optional[str], **overrides: t.Any) -> None:
    _execute(ctx, 'spectral', config_path, **overrides)


@orbitsieve_cli.command(help='Sift an integer sequence, fit its dimension and tabulate remainders.')
@run_options
@click.pass_context
def sieve(ctx: click.Context, config_path: t.Optional[str], **overrides: t.Any) -> None:
    _execute(ctx, 'sieve', config_path, **overrides)


@orbitsieve_cli.command(help='Count almost-prime orbit values of random walks over a grid of steps and r.')
@run_options
@click.pass_context
def saturation(ctx: click.Context, config_path: t.Optional[str], **overrides: t.Any) -> None:
    _execute(ctx, 'saturation', config_path, **overrides)


@orbitsieve_cli.command(help='Homology statistics of random Heegaard splittings.')
@run_options
@click.pass_context
def dt3m(ctx: click.Context, config_path: t.Optional[str], **overrides: t.Any) -> None:
    _execute(ctx, 'dt3m', config_path, **overrides)


@orbitsieve_cli.command(help='Check the prime-factor counting baselines on 1..X.')
@run_options
@click.pass_context
def baselines(ctx: click.Context, config_path: t.Optional[str], **overrides: t.Any) -> None:
    _execute(ctx, 'baselines', config_path, **overrides)


if __name__ == '__main__':
    orbitsieve_cli()
