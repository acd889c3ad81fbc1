from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

import numpy as np

from chebygreedy.errors import ConfigurationError, DomainError, StructuralError
from chebygreedy.models.dictionaries.dictionary import Dictionary
from chebygreedy.models.space import GridSpace, lp_norms
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)


def normalize_columns(space: GridSpace, matrix: np.ndarray) -> np.ndarray:
    """
    Rescale every column of ``matrix`` to unit norm in ``space``.

    Raises:
        DomainError:
            If a column is zero.
    """
    matrix = np.asarray(matrix, dtype=float)
    norms = lp_norms(matrix, space.weights, space.p, axis=0)

    if np.any(norms == 0):
        raise DomainError(f'Cannot normalize zero element(s) at {np.flatnonzero(norms == 0).tolist()}.')

    return matrix / norms


def _check_grid(space: GridSpace, d: int) -> tuple[int, ...]:
    if d < 1:
        raise ConfigurationError('The number of axes d must be at least 1.')

    if space.shape is None or len(space.shape) != d:
        raise ConfigurationError(f'Expected a tensor grid with {d} axes, got {space!r}.')

    return space.shape


def _tensorize(space: GridSpace, factors: Sequence[list[tuple[str, np.ndarray]]]) -> tuple[np.ndarray, list[str]]:
    columns = []
    labels = []

    for combo in itertools.product(*factors):
        labels.append('|'.join(label for label, _ in combo))
        columns.append(reduce(np.multiply.outer, [values for _, values in combo]).ravel())

    return normalize_columns(space, np.column_stack(columns)), labels


def _trigonometric_axis(points: np.ndarray, max_freq: int) -> list[tuple[str, np.ndarray]]:
    functions = [('1', np.ones_like(points))]

    for k in range(1, max_freq + 1):
        functions.append((f'cos{k}', np.cos(2 * np.pi * k * points)))
        functions.append((f'sin{k}', np.sin(2 * np.pi * k * points)))

    return functions


def build_trigonometric(d: int, max_freq: int, space: GridSpace) -> Dictionary:
    """
    The real d-variate trigonometric system normalized in L_p.

    Products of the univariate functions ``1, cos 2 pi k x, sin 2 pi k x`` for
    ``k <= max_freq``, ordered per axis by frequency with ``1 < cos < sin`` and
    combined lexicographically (axis 0 slowest).

    Parameters:
        d (int):
            Number of axes.

        max_freq (int):
            Per-axis frequency cutoff.

        space (GridSpace):
            A uniform tensor grid with more than ``2 * max_freq`` points per axis.

    Returns:
        Dictionary:
            ``(2 * max_freq + 1) ** d`` elements; orthonormal when ``p = 2``.

    Raises:
        ConfigurationError:
            If the grid does not have ``d`` axes or is too coarse.
    """
    if max_freq < 0:
        raise ConfigurationError('max_freq must be non-negative.')

    shape = _check_grid(space, d)

    if any(n <= 2 * max_freq for n in shape):
        raise ConfigurationError(
            f'Grid {shape} is too coarse for max_freq={max_freq}; every axis needs more than {2 * max_freq} points.'
        )

    factors = [_trigonometric_axis(points, max_freq) for points in space.grid_axes()]
    matrix, labels = _tensorize(space, factors)
    log.debug('Built trigonometric dictionary d=%d max_freq=%d with %d elements', d, max_freq, len(labels))

    return Dictionary(space, matrix, labels, kind='trigonometric', params={'d': d, 'max_freq': max_freq})


def _dyadic_label(k: int, level: int) -> str:
    left = Fraction(k, 2 ** level)
    right = Fraction(k + 1, 2 ** level)
    return f'[{left},{right})'


def _haar_axis(n: int, levels: int) -> list[tuple[str, np.ndarray]]:
    functions = [('[0,1]', np.ones(n))]

    for level in range(levels):
        width = n >> level
        half = width // 2

        for k in range(2 ** level):
            values = np.zeros(n)
            values[k * width:k * width + half] = 1.0
            values[k * width + half:(k + 1) * width] = -1.0
            functions.append((_dyadic_label(k, level), values))

    return functions


def build_haar(levels: int, d: int, space: GridSpace) -> Dictionary:
    """
    The (tensorized) Haar system normalized in L_p.

    The univariate system is the constant, labelled ``[0,1]``, followed by
    ``H_I`` for dyadic ``I`` ordered by (level, position); the first one is
    labelled ``[0,1)``. ``H_I`` is ``+c`` on the left half of ``I`` and ``-c``
    on the right half with ``c = |I|**(-1/p)``.

    Raises:
        ConfigurationError:
            If an axis size is not a power of two, or not ``2 ** levels``.
    """
    if levels < 0:
        raise ConfigurationError('levels must be non-negative.')

    shape = _check_grid(space, d)

    for n in shape:
        if n & (n - 1):
            raise ConfigurationError(f'Grid size {n} is not a power of 2.')

        if n != 2 ** levels:
            raise ConfigurationError(f'Grid size {n} does not match 2**levels = {2 ** levels}.')

    factors = [_haar_axis(n, levels) for n in shape]
    matrix, labels = _tensorize(space, factors)
    log.debug('Built Haar dictionary d=%d levels=%d with %d elements', d, levels, len(labels))

    return Dictionary(space, matrix, labels, kind='haar', params={'d': d, 'levels': levels})


def build_gaussian(n: int, count: int, seed: Optional[int], space: GridSpace) -> Dictionary:
    """
    ``count`` i.i.d. standard normal columns renormalized in L_p.

    Bit-for-bit reproducible for a fixed ``seed``.
    """
    if space.dim != n:
        raise StructuralError(f'Space dimension {space.dim} does not match n={n}.')

    if count < 1:
        raise DomainError('A dictionary needs at least one element.')

    rng = np.random.default_rng(seed)
    matrix = normalize_columns(space, rng.standard_normal((n, count)))
    labels = [f'g{i}' for i in range(count)]

    return Dictionary(space, matrix, labels, kind='gaussian', params={'n': n, 'count': count}, seed=seed)


def build_custom(
        matrix: np.ndarray,
        space:  GridSpace,
        labels: Optional[Sequence[str]] = None,
        params: Optional[dict] = None
) -> Dictionary:
    """
    Wrap user supplied columns, renormalizing each one in L_p.

    Raises:
        DomainError:
            If a column is zero.
    """
    matrix = np.asarray(matrix, dtype=float)

    if matrix.ndim == 1:
        matrix = matrix[:, None]

    if matrix.ndim != 2 or matrix.shape[0] != space.dim:
        raise StructuralError(f'Expected {space.dim} rows, got shape {matrix.shape}.')

    labels = list(labels) if labels is not None else [f'e{i}' for i in range(matrix.shape[1])]

    return Dictionary(space, normalize_columns(space, matrix), labels, kind='custom', params=params)
