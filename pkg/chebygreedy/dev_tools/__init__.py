"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-03 14:09:30
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-03 14:09:30
FilePath: chebygreedy/dev_tools/__init__.py
Description: Seeded instance generators for tests and interactive sessions.
"""
