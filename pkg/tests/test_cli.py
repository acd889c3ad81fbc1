import json

import pandas as pd
import pytest

from chebygreedy.harness import cli
from chebygreedy.harness.result import ExperimentResult


RECOVERY = {
    'kind': 'recovery',
    'seed': 1,
    'trials': 2,
    'space': {'grid': [16], 'p': 2},
    'dictionary': {'kind': 'trigonometric', 'params': {'max_freq': 3}},
    'signal': {'K': [2]},
    'algorithm': {'name': 'womp', 'budget': 'K'},
}


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / 'recovery.json'
    path.write_text(json.dumps(RECOVERY))
    return path


def test_recover_writes_results(tmp_path, config_file):
    out = tmp_path / 'out'

    assert cli.main(['recover', '--config', str(config_file), '--out', str(out), '-q']) == cli.EXIT_OK

    assert {p.name for p in out.iterdir()} == {'result.csv', 'summary.json', 'timing.csv'}
    assert json.loads((out / 'summary.json').read_text())['summary']['success_rate'] == 1.0


def test_seed_flag_overrides_the_config(tmp_path, config_file):
    out = tmp_path / 'out'

    cli.main(['recover', '--config', str(config_file), '--out', str(out), '--seed', '9', '-q'])

    assert set(pd.read_csv(out / 'result.csv')['seed']) == {9}


def test_configuration_errors_exit_with_2(tmp_path, config_file):
    assert cli.main(['lebesgue', '--config', str(config_file), '-q']) == cli.EXIT_CONFIG
    assert cli.main(['recover', '--config', str(tmp_path / 'missing.json'), '-q']) == cli.EXIT_CONFIG
    assert cli.main(['recover', '-q']) == cli.EXIT_CONFIG
    assert cli.main(['recover', '--config', str(config_file), '--threads', '0', '-q']) == cli.EXIT_CONFIG


def test_threads_from_the_environment(monkeypatch, tmp_path, config_file):
    seen = {}

    def fake_run(cfg, threads, progress):
        seen['threads'] = threads
        return ExperimentResult(cfg, pd.DataFrame(), {})

    monkeypatch.setattr(cli, 'run_experiment', fake_run)
    monkeypatch.setenv(cli.THREADS_ENV, '3')

    assert cli.main(['recover', '--config', str(config_file), '--out', str(tmp_path / 'a'), '-q']) == cli.EXIT_OK
    assert seen['threads'] == 3

    cli.main(['recover', '--config', str(config_file), '--out', str(tmp_path / 'b'), '--threads', '2', '-q'])
    assert seen['threads'] == 2

    monkeypatch.setenv(cli.THREADS_ENV, 'many')
    assert cli.main(['recover', '--config', str(config_file), '-q']) == cli.EXIT_CONFIG


def test_violations_exit_with_3(monkeypatch, tmp_path, config_file):
    def fake_run(cfg, threads, progress):
        return ExperimentResult(cfg, pd.DataFrame(), {}, violations=['trial 0: residual norms increased'])

    monkeypatch.setattr(cli, 'run_experiment', fake_run)

    assert cli.main(['recover', '--config', str(config_file), '--out', str(tmp_path / 'out'), '-q']) == cli.EXIT_VIOLATION
    assert json.loads((tmp_path / 'out' / 'summary.json').read_text())['violation_count'] == 1


def test_presets_are_valid_configs():
    for kind, preset in cli.PRESETS.items():
        cfg = cli.ExperimentConfig.from_dict({**preset, 'kind': kind, 'seed': 0})

        assert cfg.kind == kind
