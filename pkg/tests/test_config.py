import json

import numpy as np
import pytest

from chebygreedy.dev_tools.instances import get_gaussian_dictionary
from chebygreedy.errors import ConfigurationError
from chebygreedy.harness import Budget, ExperimentConfig, load_config
from chebygreedy.harness.signals import add_noise, derived_seed, planted_signal, stream


RECOVERY = {
    'kind': 'recovery',
    'seed': 7,
    'trials': 3,
    'space': {'grid': [16], 'p': 2},
    'dictionary': {'kind': 'trigonometric', 'params': {'max_freq': 3}},
    'signal': {'K': [1, 2]},
    'algorithm': {'name': 'womp', 'budget': 'K'},
}


@pytest.mark.parametrize('text, m, K, expected', [
    ('m', 5, 0, 5),
    ('4*K', 0, 4, 16),
    ('m*ceil(log(m+1))', 1, 0, 1),
    ('m*ceil(log(m+1))', 3, 0, 6),
    ('m/3', 1, 0, 1),
    ('max(m - 5, 0)', 2, 0, 0),
    ('m // 2 + min(K, 2)', 5, 7, 4),
])
def test_budget_values(text, m, K, expected):
    assert Budget(text)(m, K) == expected


@pytest.mark.parametrize('text', ['n', 'm**2', '__import__("os")', 'log(m, 2)', 'm if K else 1', '', 'm +'])
def test_budget_rejects_other_expressions(text):
    with pytest.raises(ConfigurationError):
        Budget(text)


def test_budget_evaluation_errors():
    with pytest.raises(ConfigurationError):
        Budget('log(m)')(0)

    with pytest.raises(ConfigurationError):
        Budget('1/(m-1)')(1)


def test_config_round_trip():
    cfg = ExperimentConfig.from_dict(RECOVERY)

    assert cfg.signal.K == (1, 2)
    assert cfg.algorithm.parsed_budget()(3, 2) == 2
    assert ExperimentConfig.from_dict(cfg.to_dict()) == cfg


def test_config_overrides():
    cfg = ExperimentConfig.from_dict(RECOVERY).with_overrides(seed=11, output='runs/x')

    assert cfg.seed == 11
    assert cfg.output == 'runs/x'


@pytest.mark.parametrize('change', [
    {'seed': None},
    {'trials': 0},
    {'colour': 'red'},
    {'kind': 'lebesgue'},
    {'r': 1.5},
    {'space': {'grid': [16], 'p': 1.0}},
    {'dictionary': {'kind': 'wavelet'}},
    {'signal': {'K': [0]}},
    {'signal': {'eps': -0.1}},
    {'algorithm': {'name': 'omp'}},
    {'algorithm': {'t': 0.0}},
    {'algorithm': {'budget': 'm**2'}},
    {'analysis': {'D': 0}},
])
def test_invalid_configs(change):
    raw = {**RECOVERY, **change}
    raw = {k: v for k, v in raw.items() if v is not None}

    with pytest.raises(ConfigurationError):
        ExperimentConfig.from_dict(raw, kind='recovery')


def test_load_config(tmp_path):
    path = tmp_path / 'recovery.json'
    path.write_text(json.dumps(RECOVERY))

    assert load_config(path, kind='recovery').seed == 7

    with pytest.raises(ConfigurationError):
        load_config(tmp_path / 'missing.json')

    path.write_text('{"kind": ')

    with pytest.raises(ConfigurationError):
        load_config(path)


def test_streams_are_independent_and_reproducible():
    a = stream(3, 0, 'noise').standard_normal(4)

    np.testing.assert_array_equal(a, stream(3, 0, 'noise').standard_normal(4))
    assert not np.array_equal(a, stream(3, 1, 'noise').standard_normal(4))
    assert not np.array_equal(a, stream(3, 0, 'signal').standard_normal(4))
    assert 0 <= derived_seed(3, None, 'dictionary') < 2 ** 63

    with pytest.raises(ConfigurationError):
        stream(3, 0, 'weather')


def test_noise_has_the_requested_norm():
    dictionary = get_gaussian_dictionary(16, 8, 3.0)
    f = dictionary.element(0)
    noisy = add_noise(f, 0.25, stream(0, 0, 'noise'))

    assert (noisy - f).norm() == pytest.approx(0.25)
    assert add_noise(f, 0.0, stream(0, 0, 'noise')) is f


def test_planted_signals_are_reproducible():
    dictionary = get_gaussian_dictionary(16, 8)
    rep, f0 = planted_signal(dictionary, 3, 'uniform_gap', 0.0, 5, 2)
    again, g0 = planted_signal(dictionary, 3, 'uniform_gap', 0.0, 5, 2)

    assert rep == again
    assert rep.size == 3
    assert all(0.1 <= abs(v) <= 1.0 for v in rep.coefficients.values())
    np.testing.assert_array_equal(f0.values, g0.values)
