"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-03 14:09:11
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-03 14:09:11
FilePath: chebygreedy/utils/__init__.py
Description: Logging and path helpers.
"""
