"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-07 14:05:37
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-07 14:05:37
FilePath: chebygreedy/harness/__init__.py
Description: Seeded experiment runner and command line interface.
"""
from chebygreedy.harness.budget import Budget
from chebygreedy.harness.config import ExperimentConfig, load_config
from chebygreedy.harness.experiments import (
    fit_decay_slope,
    run_analyze,
    run_bilinear,
    run_decay_demo,
    run_experiment,
    run_lebesgue,
    run_rate_bound,
    run_recovery,
)
from chebygreedy.harness.result import ExperimentResult

__all__ = [
    'Budget',
    'ExperimentConfig',
    'ExperimentResult',
    'fit_decay_slope',
    'load_config',
    'run_analyze',
    'run_bilinear',
    'run_decay_demo',
    'run_experiment',
    'run_lebesgue',
    'run_rate_bound',
    'run_recovery',
]
