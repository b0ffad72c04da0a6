from pathlib import Path

import pytest
from orbitsieve_cli.config import COMMANDS, load_config
from orbitsieve_cli.exceptions import ConfigError


def _write(tmp_path: Path, text: str) -> Path:
    path = tmp_path / 'run.toml'
    path.write_text(text, encoding='utf-8')
    return path


def test_defaults() -> None:
    config = load_config(None, 'sieve')

    assert config.command == 'sieve'
    assert config.seed == 0
    assert config.group.build().name == 'lubotzky'
    assert len(COMMANDS) == 7


def test_overrides(tmp_path: Path) -> None:
    path = _write(tmp_path, 'seed = 5\n[output]\nformats = ["json"]\n')

    config = load_config(path, 'spectral', {'seed': 11, 'out': tmp_path / 'out', 'workers': None})

    assert config.seed == 11
    assert config.output.directory == str(tmp_path / 'out')
    assert config.output.formats == ['json']
    assert config.workers == 1


def test_metadata_leaves_out_scheduling(tmp_path: Path) -> None:
    config = load_config(None, 'saturation', {'workers': 4, 'resume': str(tmp_path / 'walk.json')})

    metadata = config.metadata()

    assert 'workers' not in metadata
    assert 'resume' not in metadata
    assert metadata['seed'] == 0


def test_inline_generators(tmp_path: Path) -> None:
    path = _write(tmp_path, '[group]\nname = "sanov"\ngenerators = [[[1, 2], [0, 1]], [[1, 0], [2, 1]]]\n')

    preset = load_config(path, 'strongapprox').group.build()

    assert preset.name == 'sanov'
    assert preset.size == 5


@pytest.mark.parametrize(
    ('text', 'line'),
    [
        ('seed = -1\n', 1),
        ('samples = 10\n\n[sieve]\nsorce = "file"\n', 4),
        ('z = 30\n[group]\ngenerators = [[[2, 0], [0, 1]]]\n', 2),
        ('[effort]\ntrial_bound = 1\n', 2),
        ('samples = 10\nseed = \n', 2),
        ('command = "spectral"\n', 1),
    ],
)
def test_errors_carry_the_line(tmp_path: Path, text: str, line: int) -> None:
    path = _write(tmp_path, text)

    with pytest.raises(ConfigError) as exc_info:
        load_config(path, 'sieve')

    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f'{path}:{line}:')


def test_x0_must_match_the_group(tmp_path: Path) -> None:
    path = _write(tmp_path, 'x0 = [1, 2, 3]\n')

    with pytest.raises(ConfigError, match='x0 has 3 entries'):
        load_config(path, 'saturation')


def test_polynomial_arity(tmp_path: Path) -> None:
    path = _write(tmp_path, '[sieve]\nsource = "polynomial"\n\n[polynomial]\nexpression = "x0*x1"\n')

    with pytest.raises(ConfigError) as exc_info:
        load_config(path, 'sieve')

    assert exc_info.value.line == 4


def test_dt3m_needs_a_symplectic_preset(tmp_path: Path) -> None:
    assert load_config(_write(tmp_path, '[dt3m]\npreset = "sl2z"\n'), 'dt3m').dt3m.preset == 'sl2z'

    with pytest.raises(ConfigError):
        load_config(_write(tmp_path, '[dt3m]\npreset = "apollonian"\n'), 'dt3m')
