"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-05 09:44:31
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-05 09:44:31
FilePath: chebygreedy/greedy/__init__.py
Description: TGA, WOMP and WCGA, the Chebyshev projection solver and the bound evaluators.
"""
from chebygreedy.greedy.algorithms import run_greedy, tga, wcga, womp
from chebygreedy.greedy.bounds import (
    RateBound,
    convex_hull_rate_bound,
    convex_hull_rate_report,
    decay_constant,
    incoherence_iterations,
    recovery_iterations,
    residual_decay_bound,
)
from chebygreedy.greedy.chebyshev import (
    ChebyshevConfig,
    ChebyshevProjection,
    chebyshev_project,
    chebyshev_projection,
    kkt_residual,
)
from chebygreedy.greedy.qr import IncrementalQR

__all__ = [
    'ChebyshevConfig',
    'ChebyshevProjection',
    'IncrementalQR',
    'RateBound',
    'chebyshev_project',
    'chebyshev_projection',
    'convex_hull_rate_bound',
    'convex_hull_rate_report',
    'decay_constant',
    'incoherence_iterations',
    'kkt_residual',
    'recovery_iterations',
    'residual_decay_bound',
    'run_greedy',
    'tga',
    'wcga',
    'womp',
]
