"""
Command line entry point.

    chebygreedy recover --config recovery.json --out runs/recovery --threads 4

Exit codes: 0 on completion, 2 on a configuration error, 3 when the run
observed an invariant violation.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Optional, Sequence

from chebygreedy.errors import ConfigurationError
from chebygreedy.harness.config import ExperimentConfig, load_config
from chebygreedy.harness.experiments import run_experiment
from chebygreedy.utils.log import configure, get_logger


log = get_logger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VIOLATION = 3

THREADS_ENV = 'CHEBYGREEDY_THREADS'

SUBCOMMANDS = {
    'analyze':   'analyze',
    'recover':   'recovery',
    'lebesgue':  'lebesgue',
    'ratebound': 'rate_bound',
    'bilinear':  'bilinear',
    'decay':     'decay_demo',
}

# used when no --config is given; --seed is then required
PRESETS = {
    'analyze': {
        'space': {'grid': [16], 'p': 2},
        'dictionary': {'kind': 'gaussian', 'params': {'count': 8}},
        'analysis': {'K': [1, 2], 'r': [0.5]},
    },
    'recovery': {
        'trials': 100,
        'space': {'grid': [64], 'p': 2},
        'dictionary': {'kind': 'gaussian', 'params': {'count': 128}, 'per_trial': True},
        'signal': {'K': [4], 'law': 'uniform_gap'},
        'algorithm': {'name': 'wcga', 't': 1.0, 'budget': '4*K'},
    },
    'lebesgue': {
        'trials': 10,
        'space': {'grid': [64], 'p': 4},
        'dictionary': {'kind': 'trigonometric', 'params': {'d': 1, 'max_freq': 7}},
        'signal': {'K': [2], 'eps': 0.05},
        'algorithm': {'name': 'wcga', 'budget': 'm*ceil(log(m+1))'},
        'm_values': [1, 2, 3, 4],
    },
    'rate_bound': {
        'trials': 20,
        'space': {'grid': [16], 'p': 3},
        'dictionary': {'kind': 'gaussian', 'params': {'count': 10}, 'per_trial': True},
        'signal': {'K': [1, 2, 3]},
        'algorithm': {'name': 'wcga'},
    },
    'bilinear': {
        'trials': 50,
        'bilinear': {'rows': 8, 'cols': 8},
    },
    'decay_demo': {
        'space': {'grid': [64], 'p': 4},
        'dictionary': {'kind': 'trigonometric', 'params': {'d': 1, 'max_freq': 16}},
        'signal': {'model': 'decay', 'decay_r': 1.0},
        'algorithm': {'name': 'wcga'},
    },
}


def _env_threads() -> int:
    value = os.getenv(THREADS_ENV, '1')

    try:
        return int(value)
    except ValueError:
        raise ConfigurationError(f'{THREADS_ENV} must be an integer; got {value!r}.') from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='chebygreedy',
        description='Greedy approximation experiments in L_p: recovery, Lebesgue ratios, decay bounds.',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    for command, kind in SUBCOMMANDS.items():
        sub = commands.add_parser(command, help=f'run a {kind} experiment')
        sub.add_argument('--config', help='experiment config (JSON); built-in defaults when omitted')
        sub.add_argument('--out', help='output directory (CLI > config "output" > runs/<kind>)')
        sub.add_argument('--seed', type=int, help='overrides the config seed')
        sub.add_argument(
            '--threads',
            type=int,
            default=None,
            help=f'worker threads (CLI > env:{THREADS_ENV} > 1)',
        )
        verbosity = sub.add_mutually_exclusive_group()
        verbosity.add_argument('-v', '--verbose', action='store_true', help='debug logging')
        verbosity.add_argument('-q', '--quiet', action='store_true', help='warnings only, no progress bar')

    return parser


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    kind = SUBCOMMANDS[args.command]

    if args.config is not None:
        return load_config(args.config, kind=kind).with_overrides(seed=args.seed, output=args.out)

    if args.seed is None:
        raise ConfigurationError('Without --config a --seed is required.')

    return ExperimentConfig.from_dict({**PRESETS[kind], 'kind': kind, 'seed': args.seed}).with_overrides(output=args.out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure(logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO)

    try:
        threads = args.threads if args.threads is not None else _env_threads()

        if threads < 1:
            raise ConfigurationError(f'--threads must be at least 1; got {threads}.')

        cfg = resolve_config(args)
        result = run_experiment(cfg, threads=threads, progress=not args.quiet)
    except ConfigurationError as e:
        log.error('Configuration error: %s', e)
        return EXIT_CONFIG

    out_dir = result.write(cfg.output or os.path.join('runs', cfg.kind))

    if not result.ok:
        log.error('%d invariant violation(s); see %s', len(result.violations), out_dir / 'summary.json')
        return EXIT_VIOLATION

    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
