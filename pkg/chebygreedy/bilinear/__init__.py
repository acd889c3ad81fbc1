"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-07 09:26:51
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-07 09:26:51
FilePath: chebygreedy/bilinear/__init__.py
Description: Greedy rank-one approximation of bivariate samples and its singular value oracle.
"""
from chebygreedy.bilinear.matrix import Matrix2D, load_matrix_csv
from chebygreedy.bilinear.rank_one import RankOneApproximation, RankOneConfig, greedy_rank_one, theta_m

__all__ = ['Matrix2D', 'RankOneApproximation', 'RankOneConfig', 'greedy_rank_one', 'load_matrix_csv', 'theta_m']
