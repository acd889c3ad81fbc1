"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-03 14:12:40
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-03 14:12:40
FilePath: chebygreedy/models/space/__init__.py
Description: Finite-dimensional L_p spaces: grids, vectors, norms, norming functionals, smoothness.
"""
from chebygreedy.models.space.grid import (
    FunctionVector,
    GridSpace,
    lp_norms,
    norm,
    norming_functional,
    norming_vector,
)
from chebygreedy.models.space.smoothness import SmoothnessConstants, estimate_modulus, smoothness_constants

__all__ = [
    'FunctionVector',
    'GridSpace',
    'SmoothnessConstants',
    'estimate_modulus',
    'lp_norms',
    'norm',
    'norming_functional',
    'norming_vector',
    'smoothness_constants',
]
