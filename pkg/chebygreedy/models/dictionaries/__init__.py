"""
Author: Taylor B. tayjaybabee@gmail.com
Date: 2025-02-03 15:02:18
LastEditors: Taylor B. tayjaybabee@gmail.com
LastEditTime: 2025-02-03 15:02:18
FilePath: chebygreedy/models/dictionaries/__init__.py
Description: Dictionaries of unit-norm elements, sparse representations, builders and CSV/JSON I/O.
"""
from chebygreedy.models.dictionaries.builders import (
    build_custom,
    build_gaussian,
    build_haar,
    build_trigonometric,
    normalize_columns,
)
from chebygreedy.models.dictionaries.dictionary import Dictionary, SparseRepresentation, synthesize
from chebygreedy.models.dictionaries.loader import (
    build_from_descriptor,
    load_descriptor,
    load_dictionary_csv,
    save_descriptor,
    save_dictionary_csv,
)

__all__ = [
    'Dictionary',
    'SparseRepresentation',
    'build_custom',
    'build_from_descriptor',
    'build_gaussian',
    'build_haar',
    'build_trigonometric',
    'load_descriptor',
    'load_dictionary_csv',
    'normalize_columns',
    'save_descriptor',
    'save_dictionary_csv',
    'synthesize',
]
