import json
import typing as t
from pathlib import Path

from click.testing import CliRunner, Result
from orbitsieve_cli import orbitsieve_cli


def _invoke(tmp_path: Path, command: str, config: str, *args: str) -> Result:
    path = tmp_path / f'{command}.toml'
    path.write_text(config, encoding='utf-8')
    argv = ['--silent', command, '--config', str(path), '--out', str(tmp_path / 'out'), *args]
    return CliRunner().invoke(orbitsieve_cli, argv)


def _report(tmp_path: Path, name: str) -> t.Dict[str, t.Any]:
    return json.loads((tmp_path / 'out' / name).read_text(encoding='utf-8'))


def test_sieve_on_a_file(tmp_path: Path) -> None:
    values = tmp_path / 'values.txt'
    values.write_text('\n'.join(str(n) for n in range(1, 31)) + '\n', encoding='utf-8')

    result = _invoke(tmp_path, 'sieve', f'z = 6\n[sieve]\nsource = "file"\npath = "{values.as_posix()}"\n')

    assert result.exit_code == 0, result.output
    document = _report(tmp_path, 'sieve.json')
    assert document['report']['sift']['direct'] == '8'
    assert document['report']['sift']['inclusion_exclusion'] == '8'
    assert document['report']['complete'] is True
    assert document['metadata']['command'] == 'sieve'
    assert 'workers' not in document['metadata']['config']


def test_sieve_ledger(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'sieve', 'z = 10\n[sieve]\nstop = 31\nlevel = 10\n')

    assert result.exit_code == 0, result.output
    assert _report(tmp_path, 'sieve.json')['report']['ledger']['aggregate'] == '57/35'
    lines = (tmp_path / 'out' / 'remainders.csv').read_text(encoding='utf-8').splitlines()
    assert lines[0].startswith('# {')
    assert lines[1] == 'd,congruence_sum,density,remainder'
    assert lines[3] == '2,15,1/2,-1/2'


def test_strongapprox(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'strongapprox', 'prime_range = [2, 13]\nmoduli = [6]\n')

    assert result.exit_code == 0, result.output
    report = _report(tmp_path, 'strongapprox.json')['report']
    assert report['failures'] == [3, 6]
    assert report['skipped'] == []
    surjective = {row['modulus']: row['surjective'] for row in report['rows']}
    assert surjective == {2: True, 3: False, 5: True, 7: True, 11: True, 13: True, 6: False}
    assert report['rows'][0] == {'modulus': 2, 'image_size': 6, 'ambient_size': 6, 'surjective': True}


def test_empty_prime_range(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'strongapprox', 'prime_range = [24, 28]\n')

    assert result.exit_code == 0, result.output
    assert _report(tmp_path, 'strongapprox.json')['report']['rows'] == []


def test_enumeration_cap_flags_incomplete(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'spectral', 'prime_range = [2, 7]\n[effort]\nenumeration_cap = 200\n')

    assert result.exit_code == 3
    report = _report(tmp_path, 'spectral.json')['report']
    assert report['skipped'] == [7]
    assert report['complete'] is False
    assert report['uniform_rho'] is not None


def test_invalid_config(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'sieve', 'seed = -1\n')

    assert result.exit_code == 2
    assert not (tmp_path / 'out').exists()


def test_apollonian(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'apollonian', 'z = 10\n[apollonian]\nbound = 100\n')

    assert result.exit_code == 0, result.output
    assert (tmp_path / 'out' / 'packing.txt').exists()
    report = _report(tmp_path, 'apollonian.json')['report']
    assert report['root'] == [-6, 11, 14, 15]
    assert report['zero_mass'] == '0'


def test_saturation_is_independent_of_workers(tmp_path: Path) -> None:
    config = 'steps = [4, 8]\nsamples = 20\nr = [3, 6]\nseed = 7\n'

    assert _invoke(tmp_path, 'saturation', config).exit_code == 0
    inline = (tmp_path / 'out' / 'saturation.json').read_bytes()
    assert _invoke(tmp_path, 'saturation', config, '--workers', '2').exit_code == 0
    parallel = (tmp_path / 'out' / 'saturation.json').read_bytes()

    assert inline == parallel
    report = json.loads(inline)['report']
    assert len(report['rows']) == 4

    # the lubotzky group is trivial modulo 3, so x0 = (1, 2) never reaches a zero coordinate
    for row in report['zero_set']:
        assert row['bound'] == {'prime': 3, 'bound': '0', 'observed': '0'}


def test_dt3m(tmp_path: Path) -> None:
    config = 'steps = [2, 4]\nsamples = 10\nz = 10\nprime_range = [2, 13]\n[dt3m]\npreset = "sp2z"\n'

    result = _invoke(tmp_path, 'dt3m', config)

    assert result.exit_code == 0, result.output
    report = _report(tmp_path, 'dt3m.json')['report']
    assert report['genus'] == 1
    assert [row['steps'] for row in report['by_steps']] == [2, 4]
    assert report['dimension_fit'] is not None
    assert report['densities']
    assert all(row['density'] == row['closed_form'] for row in report['densities'])


def test_baselines(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'baselines', '[baselines]\nx = 30\nkmax = 3\n')

    assert result.exit_code == 0, result.output
    counts = _report(tmp_path, 'baselines.json')['report']['almost_primes']
    assert [c['count'] for c in counts] == [10, 10, 7]


def test_command_aliases(tmp_path: Path) -> None:
    result = _invoke(tmp_path, 'base', '[baselines]\nx = 30\nkmax = 3\n')

    assert result.exit_code == 0, result.output
