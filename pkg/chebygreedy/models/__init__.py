"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-03 14:10:02
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-03 14:10:02
FilePath: chebygreedy/models/__init__.py
Description: Domain types: spaces, dictionaries, greedy traces and property reports.
"""
