"""
The experiments: exact recovery sweeps, Lebesgue ratio measurements, decay
bound validation, the smoothness decay demo, dictionary analysis and the
bilinear rank-one sweep.

Trials run on a thread pool; rows come back ordered by trial, then parameter,
whatever order the trials finish in.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

from chebygreedy.analysis import AnalysisConfig, analyze, signal_incoherence_V
from chebygreedy.analysis.supports import EXACT
from chebygreedy.bilinear import Matrix2D, RankOneConfig, greedy_rank_one, load_matrix_csv, theta_m
from chebygreedy.errors import (
    ChebyGreedyError,
    ConfigurationError,
    DomainError,
    NonConvergenceError,
    OracleCapExceeded,
)
from chebygreedy.greedy import (
    convex_hull_rate_report,
    incoherence_iterations,
    residual_decay_bound,
    run_greedy,
)
from chebygreedy.harness.config import ExperimentConfig
from chebygreedy.harness.result import ExperimentResult
from chebygreedy.harness.signals import (
    decay_representation,
    dense_signal,
    derived_seed,
    planted_signal,
    stream,
)
from chebygreedy.models.dictionaries import Dictionary, build_from_descriptor, synthesize
from chebygreedy.models.space import FunctionVector, GridSpace, smoothness_constants
from chebygreedy.models.traces import GreedyTrace
from chebygreedy.oracle import OracleConfig, is_orthonormal, lebesgue_ratio, sigma_m
from chebygreedy.oracle.sigma import RECOVERED_TOL
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)

SOLVER_ERRORS = (NonConvergenceError, DomainError)

BOUND_TOL = 1e-8
FLOOR_TOL = 1e-10
SCHMIDT_TOL = 1e-8

COLUMNS = {
    'recovery': [
        'trial', 'seed', 'K', 'budget', 'iterations_used', 'residual_norm', 'sigma_m', 'lebesgue_ratio',
        'recovered', 'termination', 'error',
    ],
    'lebesgue': [
        'trial', 'seed', 'K', 'm', 'budget', 'iterations_used', 'residual_norm', 'sigma_m', 'lebesgue_ratio',
        'oracle_support', 'error',
    ],
    'rate_bound': [
        'trial', 'seed', 'K', 'm', 'eps', 'V', 'V_method', 'residual_norm', 'bound', 'step_bound', 'sigma_m',
        'theory_iterations', 'violation', 'error',
    ],
    'decay_demo': ['trial', 'seed', 'm', 'residual_norm', 'hull_bound_shape', 'hull_bound', 'slope', 'error'],
    'analyze': ['trial', 'seed', 'constant', 's', 'K', 'D', 'r', 'value', 'method'],
    'bilinear': ['trial', 'seed', 'M', 'residual_norm', 'theta', 'difference', 'restarts', 'error'],
}


@dataclass
class TrialOutcome:
    rows:       list = field(default_factory=list)
    violations: list = field(default_factory=list)
    extra:      dict = field(default_factory=dict)
    wall_time:  float = 0.0


def _run_trials(
        cfg:      ExperimentConfig,
        trial:    Callable[[int], TrialOutcome],
        threads:  int,
        progress: bool
) -> list[TrialOutcome]:
    def timed(index: int) -> TrialOutcome:
        start = time.perf_counter()
        outcome = trial(index)
        outcome.wall_time = time.perf_counter() - start
        return outcome

    log.info('Running %d %s trial(s) on %d thread(s), seed %d', cfg.trials, cfg.kind, threads, cfg.seed)

    with ThreadPoolExecutor(max_workers=max(1, int(threads))) as pool:
        return list(tqdm(
            pool.map(timed, range(cfg.trials)),
            total=cfg.trials,
            desc=cfg.kind,
            disable=not progress,
            leave=False,
        ))


def _collect(cfg: ExperimentConfig, outcomes: list[TrialOutcome], summary: dict) -> ExperimentResult:
    rows = pd.DataFrame([row for outcome in outcomes for row in outcome.rows], columns=COLUMNS[cfg.kind])
    violations = [v for outcome in outcomes for v in outcome.violations]

    if 'error' in rows:
        summary['errors'] = int((rows['error'] != '').sum())

    for message in violations:
        log.warning('Violation: %s', message)

    log.info('%s finished: %d rows, %d violation(s)', cfg.kind, len(rows), len(violations))

    return ExperimentResult(cfg, rows, summary, violations, [outcome.wall_time for outcome in outcomes])


def build_dictionary(cfg: ExperimentConfig, space: GridSpace, trial: Optional[int] = None) -> Dictionary:
    """The configured dictionary; random kinds draw their seed from the 'dictionary' stream."""
    seed = derived_seed(cfg.seed, trial, 'dictionary') if cfg.dictionary.kind == 'gaussian' else None

    try:
        return build_from_descriptor(cfg.dictionary.descriptor(seed), space)
    except FileNotFoundError as e:
        raise ConfigurationError(str(e)) from e
    except ChebyGreedyError as e:
        if isinstance(e, ConfigurationError):
            raise
        raise ConfigurationError(f'Cannot build the configured dictionary: {e}') from e


def _dictionary_source(cfg: ExperimentConfig, space: GridSpace) -> Callable[[int], Dictionary]:
    if cfg.dictionary.per_trial:
        return lambda trial: build_dictionary(cfg, space, trial)

    shared = build_dictionary(cfg, space)
    return lambda trial: shared


def _check_sparsity(K_values, dictionary: Dictionary):
    for K in K_values:
        if K > dictionary.size:
            raise ConfigurationError(f'K={K} exceeds the dictionary size {dictionary.size}.')


def _solve(cfg: ExperimentConfig, f0: FunctionVector, dictionary: Dictionary, max_m: int) -> GreedyTrace:
    return run_greedy(cfg.algorithm.name, f0, dictionary, cfg.algorithm.policy(), min(max_m, dictionary.size))


def _trace_violations(cfg: ExperimentConfig, trace: GreedyTrace, label: str) -> list[str]:
    if cfg.algorithm.name == 'tga':
        return []

    found = []

    if not trace.is_monotone():
        found.append(f'{label}: residual norms increased')

    if not trace.satisfies_weak_selection(cfg.algorithm.t):
        found.append(f'{label}: a selection missed t * max|F(g)|')

    return found


def _oracle_fits(dictionary: Dictionary, m: int, oracle: OracleConfig) -> bool:
    return is_orthonormal(dictionary) or math.comb(dictionary.size, min(m, dictionary.size)) <= oracle.cap


def _floor_violation(label: str, m: int, residual: float, sigma: float, scale: float) -> list[str]:
    """
    ``||f_m|| >= sigma_m(f_0) - 1e-10 max(1, ||f_0||)``.

    The tolerance is absolute for ``||f_0|| <= 1`` (every planted signal with
    the default coefficient law) and relative to ``||f_0||`` above that.
    """
    if residual < sigma - FLOOR_TOL * max(1.0, scale):
        return [f'{label}: ||f_{m}|| = {residual!r} is below sigma_{m} = {sigma!r}']

    return []


def run_recovery(cfg: ExperimentConfig, threads: int = 1, progress: bool = False) -> ExperimentResult:
    """
    Exact recovery of planted K-sparse signals.

    A trial is recovered when the residual after the budget (evaluated at
    ``m = K``) is at most ``1e-9 ||f_0||`` and the selection covers the planted
    support.
    """
    if cfg.signal.eps != 0:
        raise ConfigurationError('Exact recovery needs noiseless signals (signal.eps = 0).')

    space = cfg.space.build()
    source = _dictionary_source(cfg, space)
    budget = cfg.algorithm.parsed_budget()
    _check_sparsity(cfg.signal.K, source(0))

    def trial(index: int) -> TrialOutcome:
        outcome = TrialOutcome()
        dictionary = source(index)

        for K in cfg.signal.K:
            rep, f0 = planted_signal(dictionary, K, cfg.signal.law, 0.0, cfg.seed, index)
            iterations = min(budget(K, K), dictionary.size)
            row = {'trial': index, 'seed': cfg.seed, 'K': K, 'budget': iterations, 'error': ''}

            try:
                trace = _solve(cfg, f0, dictionary, iterations)
            except SOLVER_ERRORS as e:
                outcome.rows.append({**row, 'recovered': False, 'error': f'{type(e).__name__}: {e}'})
                continue

            residual = trace.residual_norm_at(iterations)
            covered = set(rep.support) <= set(trace.selected)
            outcome.violations += _trace_violations(cfg, trace, f'trial {index}, K={K}')
            outcome.rows.append({
                **row,
                'iterations_used': trace.iterations,
                'residual_norm': residual,
                'sigma_m': 0.0,
                'lebesgue_ratio': lebesgue_ratio(
                    trace, f0, dictionary, K, iterations, planted_support=rep.support, sigma=0.0
                ),
                'recovered': bool(residual <= RECOVERED_TOL * f0.norm() and covered),
                'termination': trace.termination.value,
            })

        return outcome

    outcomes = _run_trials(cfg, trial, threads, progress)
    rows = pd.DataFrame([row for outcome in outcomes for row in outcome.rows], columns=COLUMNS['recovery'])
    summary = {
        'success_rate': float(rows['recovered'].astype(bool).mean()),
        'success_rate_by_K': {int(K): float(group.astype(bool).mean()) for K, group in rows.groupby('K')['recovered']},
    }
    log.info('Recovery success rate %.3f', summary['success_rate'])

    return _collect(cfg, outcomes, summary)


def _lebesgue_signals(cfg: ExperimentConfig, dictionary: Dictionary, index: int) -> list[tuple[int, FunctionVector]]:
    if cfg.signal.model == 'dense':
        return [(0, dense_signal(dictionary.space, stream(cfg.seed, index, 'signal')))]

    if cfg.signal.model == 'decay':
        rep = decay_representation(dictionary, cfg.signal.decay_r, stream(cfg.seed, index, 'signal'))
        return [(dictionary.size, synthesize(dictionary, rep))]

    return [
        (K, planted_signal(dictionary, K, cfg.signal.law, cfg.signal.eps, cfg.seed, index)[1])
        for K in cfg.signal.K
    ]


def run_lebesgue(
        cfg:      ExperimentConfig,
        threads:  int = 1,
        progress: bool = False,
        oracle:   OracleConfig = OracleConfig()
) -> ExperimentResult:
    """
    Measured Lebesgue ratios ``||f_budget(m)|| / sigma_m(f_0)``.

    Every trial also checks the optimality floor ``||f_m|| >= sigma_m(f_0)``
    up to ``1e-10 max(1, ||f_0||)``.

    Raises:
        OracleCapExceeded:
            Before any trial runs, when the oracle would exceed its cap.
    """
    space = cfg.space.build()
    source = _dictionary_source(cfg, space)
    budget = cfg.algorithm.parsed_budget()
    m_values = cfg.m_values or (1, 2, 3, 4)

    if min(m_values) < 1:
        raise ConfigurationError('Lebesgue ratios need m >= 1.')

    probe = source(0)

    if cfg.signal.model == 'sparse':
        _check_sparsity(cfg.signal.K, probe)

    if not _oracle_fits(probe, max(m_values), oracle):
        size = min(max(m_values), probe.size)
        total = math.comb(probe.size, size)

        raise OracleCapExceeded(
            f'The oracle would visit C({probe.size}, {size}) = {total} supports, more than the cap {oracle.cap}. '
            f'Reduce the dictionary size or the largest m.',
            supports=total,
            cap=oracle.cap,
        )

    def trial(index: int) -> TrialOutcome:
        outcome = TrialOutcome()
        dictionary = source(index)

        for K, f0 in _lebesgue_signals(cfg, dictionary, index):
            budgets = [min(budget(m, K), dictionary.size) for m in m_values]
            label = f'trial {index}, K={K}'

            try:
                trace = _solve(cfg, f0, dictionary, max(budgets))
            except SOLVER_ERRORS as e:
                outcome.rows += [
                    {'trial': index, 'seed': cfg.seed, 'K': K, 'm': m, 'budget': b, 'error': f'{type(e).__name__}: {e}'}
                    for m, b in zip(m_values, budgets)
                ]
                continue

            outcome.violations += _trace_violations(cfg, trace, label)

            for m, b in zip(m_values, budgets):
                try:
                    best = sigma_m(f0, dictionary, m, oracle)
                except NonConvergenceError as e:
                    outcome.rows.append(
                        {'trial': index, 'seed': cfg.seed, 'K': K, 'm': m, 'budget': b, 'error': f'{type(e).__name__}: {e}'}
                    )
                    continue

                outcome.violations += _floor_violation(label, m, trace.residual_norm_at(m), best.value, f0.norm())
                outcome.rows.append({
                    'trial': index,
                    'seed': cfg.seed,
                    'K': K,
                    'm': m,
                    'budget': b,
                    'iterations_used': min(b, trace.iterations),
                    'residual_norm': trace.residual_norm_at(b),
                    'sigma_m': best.value,
                    'lebesgue_ratio': lebesgue_ratio(trace, f0, dictionary, m, b, oracle, sigma=best.value),
                    'oracle_support': ' '.join(str(i) for i in best.support),
                    'error': '',
                })

        return outcome

    outcomes = _run_trials(cfg, trial, threads, progress)
    ratios = np.array([row['lebesgue_ratio'] for outcome in outcomes for row in outcome.rows if 'lebesgue_ratio' in row])
    summary = {
        'max_ratio': float(np.max(ratios)) if ratios.size else math.nan,
        'median_ratio': float(np.median(ratios)) if ratios.size else math.nan,
        'all_finite': bool(np.all(np.isfinite(ratios))),
    }
    log.info('Lebesgue ratios: max %.6g, median %.6g', summary['max_ratio'], summary['median_ratio'])

    return _collect(cfg, outcomes, summary)


def run_rate_bound(cfg: ExperimentConfig, threads: int = 1, progress: bool = False) -> ExperimentResult:
    """
    Check the geometric decay bound on every ``(trial, K, m)`` with ``K + m <= N``.

    ``V`` is the exact l1-incoherence constant of the planted signal with depth
    ``D = N``. Each row compares ``||f_m||`` with the bound from ``k = 0`` and
    with the one-step bound from ``k = m - 1``; exceeding either by more than
    ``1e-8`` is a violation when ``V`` is exact. Wherever the oracle fits its
    cap, at any ``p``, the row also carries ``sigma_m`` and the optimality
    floor is checked.
    """
    if cfg.algorithm.name == 'tga':
        raise ConfigurationError('The decay bound holds for WCGA and WOMP, not TGA.')

    space = cfg.space.build()
    source = _dictionary_source(cfg, space)
    sc = smoothness_constants(space.p)
    t = cfg.algorithm.t
    eps = cfg.signal.eps
    _check_sparsity(cfg.signal.K, source(0))

    def bound(norm_fk: float, k: int, m: int, K: int, V: float) -> float:
        return residual_decay_bound(norm_fk, k, m, K, cfg.r, sc, V, t, eps)

    def trial(index: int) -> TrialOutcome:
        outcome = TrialOutcome()
        dictionary = source(index)
        D = dictionary.size

        for K in cfg.signal.K:
            rep, f0 = planted_signal(dictionary, K, cfg.signal.law, eps, cfg.seed, index)
            m_values = [m for m in (cfg.m_values or range(D - K + 1)) if m <= D - K]
            estimate = signal_incoherence_V(dictionary, rep, D, cfg.r)
            V = estimate.value if math.isinf(estimate.value) else max(estimate.value, 1.0)
            theory = incoherence_iterations(V, K, cfg.r, sc, t) if math.isfinite(V) else None
            label = f'trial {index}, K={K}'

            if not m_values:
                continue

            try:
                trace = _solve(cfg, f0, dictionary, max(m_values))
            except SOLVER_ERRORS as e:
                outcome.rows += [
                    {'trial': index, 'seed': cfg.seed, 'K': K, 'm': m, 'eps': eps, 'V': V, 'error': f'{type(e).__name__}: {e}'}
                    for m in m_values
                ]
                continue

            outcome.violations += _trace_violations(cfg, trace, label)

            for m in m_values:
                measured = trace.residual_norm_at(m)
                from_start = bound(f0.norm(), 0, m, K, V)
                one_step = bound(trace.residual_norm_at(m - 1), m - 1, m, K, V) if m else from_start
                violated = measured > min(from_start, one_step) + BOUND_TOL
                sigma = math.nan

                if _oracle_fits(dictionary, m, OracleConfig()):
                    try:
                        sigma = sigma_m(f0, dictionary, m).value
                    except NonConvergenceError as e:
                        log.warning('%s, m=%d: oracle did not converge (%s)', label, m, e)
                    else:
                        outcome.violations += _floor_violation(label, m, measured, sigma, f0.norm())

                if violated and estimate.method == EXACT:
                    outcome.violations.append(
                        f'{label}, m={m}: ||f_m|| = {measured!r} exceeds the bound {min(from_start, one_step)!r}'
                    )
                elif violated:
                    log.warning('%s, m=%d exceeds a bound computed from a sampled V', label, m)

                outcome.rows.append({
                    'trial': index,
                    'seed': cfg.seed,
                    'K': K,
                    'm': m,
                    'eps': eps,
                    'V': V,
                    'V_method': estimate.method,
                    'residual_norm': measured,
                    'bound': from_start,
                    'step_bound': one_step,
                    'sigma_m': sigma,
                    'theory_iterations': theory,
                    'violation': bool(violated),
                    'error': '',
                })

        return outcome

    outcomes = _run_trials(cfg, trial, threads, progress)
    checked = [row for outcome in outcomes for row in outcome.rows if not row['error']]
    summary = {
        'pairs': len(checked),
        'bound_violations': int(sum(row['violation'] for row in checked)),
        'max_measured_over_bound': max((row['residual_norm'] / row['bound'] for row in checked if row['bound'] > 0), default=math.nan),
    }

    return _collect(cfg, outcomes, summary)


def fit_decay_slope(m_values, residuals) -> float:
    """
    Least-squares slope of ``log ||f_m||`` against ``log m`` over ``m >= 1``.

    Zero residuals carry no decay information and are dropped; with fewer
    than two points left the slope is NaN. A flat residual has slope 0.
    """
    m_values = np.asarray(m_values, dtype=float)
    residuals = np.asarray(residuals, dtype=float)
    keep = (m_values >= 1) & (residuals > 0)

    if np.count_nonzero(keep) < 2:
        return math.nan

    x, y = np.log(m_values[keep]), np.log(residuals[keep])

    if np.ptp(y) == 0.0:
        return 0.0

    return float(np.polyfit(x, y, 1)[0])


def run_decay_demo(cfg: ExperimentConfig, threads: int = 1, progress: bool = False) -> ExperimentResult:
    """
    Residual decay on a signal with power-law coefficients.

    Reports the fitted log-log slope per trial and the convex-hull rate bound
    with ``A(eps) = sum |x_i|``. Informational only: no row can fail.
    """
    space = cfg.space.build()
    source = _dictionary_source(cfg, space)
    sc = smoothness_constants(space.p)
    size = source(0).size
    m_values = sorted({m for m in (cfg.m_values or range(1, size // 2 + 1)) if 1 <= m <= size})

    if not m_values:
        raise ConfigurationError(f'No m value lies in [1, {size}].')

    def trial(index: int) -> TrialOutcome:
        outcome = TrialOutcome()
        dictionary = source(index)
        rep = decay_representation(dictionary, cfg.signal.decay_r, stream(cfg.seed, index, 'signal'))
        f0 = synthesize(dictionary, rep)

        try:
            trace = _solve(cfg, f0, dictionary, max(m_values))
        except SOLVER_ERRORS as e:
            outcome.rows += [{'trial': index, 'seed': cfg.seed, 'm': m, 'error': f'{type(e).__name__}: {e}'} for m in m_values]
            return outcome

        residuals = [trace.residual_norm_at(m) for m in m_values]
        slope = fit_decay_slope(m_values, residuals)
        outcome.extra['slope'] = slope
        outcome.violations += _trace_violations(cfg, trace, f'trial {index}')

        for m, residual in zip(m_values, residuals):
            hull = convex_hull_rate_report(m, rep.l1_norm, 0.0, sc, cfg.algorithm.t, cfg.rate_constant)
            outcome.rows.append({
                'trial': index,
                'seed': cfg.seed,
                'm': m,
                'residual_norm': residual,
                'hull_bound_shape': hull.shape_only,
                'hull_bound': hull.configured,
                'slope': slope,
                'error': '',
            })

        log.debug('Decay demo trial %d: slope %.4f', index, slope)

        return outcome

    outcomes = _run_trials(cfg, trial, threads, progress)
    slopes = [outcome.extra.get('slope', math.nan) for outcome in outcomes]
    finite = [s for s in slopes if math.isfinite(s)]
    summary = {
        'slopes': slopes,
        'median_slope': float(np.median(finite)) if finite else math.nan,
        'decay_r': cfg.signal.decay_r,
    }

    return _collect(cfg, outcomes, summary)


def run_analyze(cfg: ExperimentConfig, threads: int = 1, progress: bool = False) -> ExperimentResult:
    """A :class:`PropertyReport` per trial; violated implications between constants are violations."""
    space = cfg.space.build()
    source = _dictionary_source(cfg, space)
    settings = cfg.analysis
    probe = source(0)
    _check_sparsity(settings.K, probe)

    if settings.D is not None and not max(settings.K) <= settings.D <= probe.size:
        raise ConfigurationError(f'analysis.D={settings.D} must lie in [{max(settings.K)}, {probe.size}].')

    def trial(index: int) -> TrialOutcome:
        outcome = TrialOutcome()
        report = analyze(
            source(index),
            K=settings.K,
            D=settings.D,
            r=settings.r,
            config=AnalysisConfig(seed=derived_seed(cfg.seed, index, 'solver')),
        )
        document = report.to_dict()
        outcome.extra['report'] = document
        outcome.violations += [f'trial {index}: {message}' for message in report.violations()]

        if report.coherence is not None:
            outcome.rows.append({'trial': index, 'seed': cfg.seed, 'constant': 'coherence', 'value': report.coherence, 'method': EXACT})

        for constant in ('rip', 'unconditionality', 'nikolskii', 'ell1_incoherence'):
            for entry in document[constant]:
                outcome.rows.append({
                    'trial': index,
                    'seed': cfg.seed,
                    'constant': constant,
                    's': entry.get('s'),
                    'K': entry.get('K'),
                    'D': entry.get('D'),
                    'r': entry.get('r'),
                    'value': float(entry['value']),
                    'method': entry['method'],
                })

        return outcome

    outcomes = _run_trials(cfg, trial, threads, progress)

    return _collect(cfg, outcomes, {'reports': [outcome.extra['report'] for outcome in outcomes]})


def run_bilinear(cfg: ExperimentConfig, threads: int = 1, progress: bool = False) -> ExperimentResult:
    """
    Greedy rank-one residuals against the singular value tail, per ``M``.

    A difference above ``1e-8`` is a violation.
    """
    settings = cfg.bilinear
    loaded = None

    if settings.path is not None:
        try:
            loaded = load_matrix_csv(settings.path)
        except (FileNotFoundError, ChebyGreedyError) as e:
            raise ConfigurationError(f'Cannot load {settings.path}: {e}') from e

    def trial(index: int) -> TrialOutcome:
        outcome = TrialOutcome()
        f = loaded if loaded is not None else Matrix2D(
            stream(cfg.seed, index, 'signal').standard_normal((settings.rows, settings.cols))
        )
        M_values = settings.M or tuple(range(1, min(f.shape) + 1))

        try:
            approximation = greedy_rank_one(f, max(M_values), RankOneConfig(seed=derived_seed(cfg.seed, index, 'solver')))
        except NonConvergenceError as e:
            outcome.rows += [{'trial': index, 'seed': cfg.seed, 'M': M, 'error': f'{type(e).__name__}: {e}'} for M in M_values]
            return outcome

        for M in M_values:
            residual = approximation.residual_norm_at(M)
            theta = theta_m(f, M)
            difference = abs(residual - theta)

            if difference > SCHMIDT_TOL:
                outcome.violations.append(f'trial {index}, M={M}: greedy residual {residual!r} differs from the SVD tail {theta!r}')

            outcome.rows.append({
                'trial': index,
                'seed': cfg.seed,
                'M': M,
                'residual_norm': residual,
                'theta': theta,
                'difference': difference,
                'restarts': approximation.restarts,
                'error': '',
            })

        return outcome

    outcomes = _run_trials(cfg, trial, threads, progress)
    differences = [row['difference'] for outcome in outcomes for row in outcome.rows if not row['error']]

    return _collect(cfg, outcomes, {'max_difference': max(differences, default=math.nan)})


EXPERIMENTS = {
    'recovery':   run_recovery,
    'lebesgue':   run_lebesgue,
    'rate_bound': run_rate_bound,
    'decay_demo': run_decay_demo,
    'analyze':    run_analyze,
    'bilinear':   run_bilinear,
}


def run_experiment(cfg: ExperimentConfig, threads: int = 1, progress: bool = False) -> ExperimentResult:
    """Run the experiment ``cfg.kind`` describes."""
    return EXPERIMENTS[cfg.kind](cfg, threads=threads, progress=progress)
