"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-06 16:40:09
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-06 16:40:09
FilePath: chebygreedy/oracle/__init__.py
Description: Best m-term approximation oracles and measured Lebesgue ratios.
"""
from chebygreedy.oracle.sigma import (
    OracleConfig,
    OracleResult,
    is_orthonormal,
    lebesgue_ratio,
    sigma_m,
    sigma_m_exact,
    sigma_m_orthonormal,
)

__all__ = [
    'OracleConfig',
    'OracleResult',
    'is_orthonormal',
    'lebesgue_ratio',
    'sigma_m',
    'sigma_m_exact',
    'sigma_m_orthonormal',
]
