"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-06 10:12:48
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-06 10:12:48
FilePath: chebygreedy/analysis/__init__.py
Description: Dictionary constants: coherence, RIP, unconditionality, Nikol'skii, l1 incoherence, domination.
"""
from chebygreedy.analysis.constants import ell1_incoherence_V, nikolskii_C1, signal_incoherence_V, unconditionality_U
from chebygreedy.analysis.domination import check_domination, check_equivalence, transfer_constants
from chebygreedy.analysis.incoherence import coherence, rip_delta, unconditionality_from_rip
from chebygreedy.analysis.report import analyze
from chebygreedy.analysis.supports import AnalysisConfig, Estimate

__all__ = [
    'AnalysisConfig',
    'Estimate',
    'analyze',
    'check_domination',
    'check_equivalence',
    'coherence',
    'ell1_incoherence_V',
    'nikolskii_C1',
    'rip_delta',
    'signal_incoherence_V',
    'transfer_constants',
    'unconditionality_U',
    'unconditionality_from_rip',
]
