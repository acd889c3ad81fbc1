"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-04 10:21:55
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-04 10:21:55
FilePath: chebygreedy/models/traces/__init__.py
Description: Greedy run histories and weakness policies.
"""
from chebygreedy.models.traces.trace import GreedyTrace, Termination, WeaknessPolicy

__all__ = ['GreedyTrace', 'Termination', 'WeaknessPolicy']
