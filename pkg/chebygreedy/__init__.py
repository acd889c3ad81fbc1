"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-03 13:58:02
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-03 13:58:02
FilePath: chebygreedy/__init__.py
Description: Greedy approximation in finite-dimensional L_p spaces: TGA, WOMP, WCGA, dictionary constants and oracles.
"""
__version__ = '1.0.0-dev.1'
