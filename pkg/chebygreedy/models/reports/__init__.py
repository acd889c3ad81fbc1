"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-06 11:03:17
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-06 11:03:17
FilePath: chebygreedy/models/reports/__init__.py
Description: Dictionary property reports.
"""
from chebygreedy.models.reports.report import PropertyReport

__all__ = ['PropertyReport']
