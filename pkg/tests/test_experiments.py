import json
import math

import numpy as np
import pandas as pd
import pytest

from chebygreedy.dev_tools.instances import get_twin_dictionary
from chebygreedy.errors import ConfigurationError, InvariantViolation, OracleCapExceeded
from chebygreedy.harness import (
    ExperimentConfig,
    fit_decay_slope,
    run_analyze,
    run_bilinear,
    run_decay_demo,
    run_experiment,
    run_lebesgue,
    run_rate_bound,
    run_recovery,
)
from chebygreedy.harness.cli import PRESETS
from chebygreedy.harness.experiments import _floor_violation
from chebygreedy.harness.result import ExperimentResult
from chebygreedy.models.dictionaries import save_dictionary_csv


def _config(kind, seed=0, **sections):
    return ExperimentConfig.from_dict({'kind': kind, 'seed': seed, **sections})


def _preset(kind, seed=0, **changes):
    return ExperimentConfig.from_dict({**PRESETS[kind], 'kind': kind, 'seed': seed, **changes})


ORTHONORMAL = {
    'space': {'grid': [16], 'p': 2},
    'dictionary': {'kind': 'trigonometric', 'params': {'max_freq': 3}},
}


def test_recovery_on_an_orthonormal_system():
    cfg = _config('recovery', trials=4, signal={'K': [1, 3]}, algorithm={'name': 'womp', 'budget': 'K'}, **ORTHONORMAL)

    result = run_recovery(cfg)

    assert result.ok
    assert len(result.rows) == 8
    assert result.summary['success_rate'] == 1.0
    assert result.summary['success_rate_by_K'] == {1: 1.0, 3: 1.0}
    assert (result.rows['lebesgue_ratio'] == 1.0).all()


def test_recovery_needs_noiseless_signals():
    cfg = _config('recovery', signal={'K': [1], 'eps': 0.1}, **ORTHONORMAL)

    with pytest.raises(ConfigurationError):
        run_recovery(cfg)


def test_recovery_fails_on_twins(tmp_path):
    path = save_dictionary_csv(get_twin_dictionary(8, extra=0), tmp_path / 'twins.csv')
    cfg = _config(
        'recovery',
        trials=20,
        space={'grid': [8], 'p': 2},
        dictionary={'kind': 'custom', 'params': {'path': str(path)}},
        signal={'K': [1]},
    )

    rows = run_recovery(cfg).rows

    assert not rows['recovered'].all()
    assert (rows.loc[~rows['recovered'].astype(bool), 'lebesgue_ratio'] == math.inf).all()
    assert (rows.loc[rows['recovered'].astype(bool), 'lebesgue_ratio'] == 1.0).all()


@pytest.mark.slow
@pytest.mark.parametrize('mode, t', [('strict_max', 1.0), ('adversarial_weak', 0.5)])
def test_recovery_of_gaussian_dictionaries(mode, t):
    cfg = _preset('recovery', algorithm={'name': 'wcga', 't': t, 'mode': mode, 'budget': '4*K'})

    result = run_recovery(cfg, threads=4)

    assert len(result.rows) == 100
    assert result.ok, result.violations[:5]

    if mode == 'strict_max':
        assert result.summary['success_rate'] >= 0.95


def test_lebesgue_ratio_of_an_orthonormal_system():
    cfg = _config('lebesgue', trials=3, signal={'model': 'dense'}, m_values=[1, 2, 3], **ORTHONORMAL)

    result = run_lebesgue(cfg)

    assert result.ok
    assert len(result.rows) == 9
    assert result.summary['all_finite']
    assert result.summary['max_ratio'] == pytest.approx(1.0, rel=1e-9)


def test_lebesgue_checks_the_oracle_cap_first():
    cfg = _config(
        'lebesgue',
        space={'grid': [32], 'p': 2},
        dictionary={'kind': 'gaussian', 'params': {'count': 64}},
        m_values=[6],
    )

    with pytest.raises(OracleCapExceeded):
        run_lebesgue(cfg)


@pytest.mark.slow
def test_lebesgue_pipeline_is_reproducible(tmp_path):
    cfg = _preset('lebesgue', seed=3, trials=3)

    first = run_lebesgue(cfg, threads=1)
    second = run_lebesgue(cfg, threads=3)

    assert first.ok
    assert first.summary['all_finite']
    assert (first.rows['error'] == '').all()

    a, b = first.write(tmp_path / 'a'), second.write(tmp_path / 'b')

    for name in ('result.csv', 'summary.json'):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_rate_bound_in_hilbert_space():
    cfg = _config(
        'rate_bound',
        trials=2,
        space={'grid': [12], 'p': 2},
        dictionary={'kind': 'gaussian', 'params': {'count': 8}, 'per_trial': True},
        signal={'K': [1, 2]},
    )

    result = run_rate_bound(cfg)

    assert result.ok, result.violations[:5]
    assert result.summary['pairs'] == 2 * (8 + 7)
    assert result.summary['bound_violations'] == 0
    assert (result.rows['V_method'] == 'exact').all()
    assert (result.rows['V'] >= 1.0).all()
    assert result.rows['sigma_m'].notna().all()


@pytest.mark.parametrize('p', [1.5, 3.0])
def test_rate_bound_checks_the_oracle_floor_in_lp(p):
    cfg = _config(
        'rate_bound',
        trials=2,
        space={'grid': [12], 'p': p},
        dictionary={'kind': 'gaussian', 'params': {'count': 8}, 'per_trial': True},
        signal={'K': [1]},
    )

    result = run_rate_bound(cfg)

    assert result.ok, result.violations[:5]
    assert len(result.rows) == 2 * 8
    assert result.rows['sigma_m'].notna().all()
    assert (result.rows['residual_norm'] >= result.rows['sigma_m'] - 1e-10).all()


def test_oracle_floor_tolerance():
    assert _floor_violation('t', 2, 0.5 - 5e-11, 0.5, scale=1.0) == []
    assert _floor_violation('t', 2, 0.5 - 5e-10, 0.5, scale=1.0)
    assert _floor_violation('t', 2, 50.0 - 5e-10, 50.0, scale=100.0) == []
    assert _floor_violation('t', 2, 50.0 - 5e-8, 50.0, scale=100.0)

def test_rate_bound_rejects_tga():
    cfg = _config('rate_bound', algorithm={'name': 'tga'}, **ORTHONORMAL)

    with pytest.raises(ConfigurationError):
        run_rate_bound(cfg)


@pytest.mark.slow
@pytest.mark.parametrize('p', [2.0, 3.0, 4.0, 1.5])
@pytest.mark.parametrize('mode, t', [('strict_max', 1.0), ('adversarial_weak', 0.5)])
def test_rate_bound_is_never_violated(p, mode, t):
    cfg = _preset(
        'rate_bound',
        seed=int(10 * p),
        space={'grid': [16], 'p': p},
        signal={'K': [1, 2, 3], 'eps': 0.01},
        algorithm={'name': 'wcga', 't': t, 'mode': mode},
    )

    result = run_rate_bound(cfg, threads=4)

    assert result.summary['pairs'] >= 200
    assert result.summary['bound_violations'] == 0
    assert result.ok, result.violations[:5]


def test_fit_decay_slope():
    m = np.array([1, 2, 4, 8])

    assert fit_decay_slope(m, 3.0 / m) == pytest.approx(-1.0)
    assert fit_decay_slope(m, np.ones(4)) == 0.0
    assert math.isnan(fit_decay_slope([1, 2], [1.0, 0.0]))
    assert math.isnan(fit_decay_slope([0, 1], [1.0, 0.5]))


def test_decay_demo():
    cfg = _preset('decay_demo', m_values=[1, 2, 4, 8, 16])

    result = run_decay_demo(cfg)

    assert result.ok
    assert list(result.rows['m']) == [1, 2, 4, 8, 16]
    assert result.rows['residual_norm'].is_monotonic_decreasing
    assert result.summary['median_slope'] < 0
    assert (result.rows['hull_bound'] == result.rows['hull_bound_shape']).all()


def test_decay_demo_needs_m_values():
    with pytest.raises(ConfigurationError):
        run_decay_demo(_preset('decay_demo', m_values=[0]))


def test_analyze():
    cfg = _config(
        'analyze',
        trials=2,
        space={'grid': [8], 'p': 2},
        dictionary={'kind': 'gaussian', 'params': {'count': 5}, 'per_trial': True},
        analysis={'K': [1, 2], 'D': 4},
    )

    result = run_analyze(cfg)

    assert result.ok, result.violations
    assert len(result.summary['reports']) == 2
    assert set(result.rows['constant']) == {'coherence', 'rip', 'unconditionality', 'nikolskii', 'ell1_incoherence'}


def test_analyze_checks_the_depth():
    cfg = _config('analyze', analysis={'K': [2], 'D': 1}, **ORTHONORMAL)

    with pytest.raises(ConfigurationError):
        run_analyze(cfg)


def test_bilinear():
    cfg = _config('bilinear', trials=3, bilinear={'rows': 6, 'cols': 5})

    result = run_experiment(cfg)

    assert result.ok
    assert len(result.rows) == 15
    assert result.summary['max_difference'] <= 1e-8


def test_bilinear_from_csv(tmp_path):
    path = tmp_path / 'f.csv'
    path.write_text('1,2\n3,4\n5,6\n')

    result = run_bilinear(_config('bilinear', trials=2, bilinear={'path': str(path), 'M': [1]}))

    assert list(result.rows['M']) == [1, 1]
    assert result.rows['residual_norm'][0] == result.rows['residual_norm'][1]

    with pytest.raises(ConfigurationError):
        run_bilinear(_config('bilinear', bilinear={'path': str(tmp_path / 'missing.csv')}))


def test_result_files(tmp_path):
    cfg = _config('recovery', trials=2, signal={'K': [2]}, **ORTHONORMAL)

    out = run_experiment(cfg).write(tmp_path / 'run')
    summary = json.loads((out / 'summary.json').read_text())

    assert summary['kind'] == 'recovery'
    assert summary['violation_count'] == 0
    assert summary['config']['seed'] == 0
    assert len(pd.read_csv(out / 'result.csv')) == 2
    assert list(pd.read_csv(out / 'timing.csv')['trial']) == [0, 1]


def test_raise_for_violations():
    cfg = _config('recovery', trials=1, signal={'K': [1]}, **ORTHONORMAL)
    result = run_experiment(cfg)

    result.raise_for_violations()

    flagged = ExperimentResult(cfg, result.rows, result.summary, ['trial 0: residual norms increased'])

    with pytest.raises(InvariantViolation, match='1 violation'):
        flagged.raise_for_violations()
