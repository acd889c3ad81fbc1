from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.utils.paths import existing_file


class Matrix2D:
    """
    Samples ``f(x_1, x_2)`` of a bivariate function on a product grid.

    The ambient norm is the weighted L_2 norm with product weights
    ``w_i v_j``; uniform probability weights by default.

    Properties:
        values (np.ndarray):
            Read-only ``rows x cols`` array.

        row_weights (np.ndarray):
            Positive weights ``w`` of the first variable.

        col_weights (np.ndarray):
            Positive weights ``v`` of the second variable.
    """
    def __init__(
            self,
            values:      np.ndarray,
            row_weights: Optional[Sequence[float]] = None,
            col_weights: Optional[Sequence[float]] = None
    ):
        values = np.array(values, dtype=float, copy=True)

        if values.ndim != 2 or min(values.shape) < 1:
            raise StructuralError(f'Expected a non-empty 2-D array, got shape {values.shape}.')

        if not np.all(np.isfinite(values)):
            raise DomainError('Matrix entries must be finite.')

        rows, cols = values.shape
        self.__row_weights = self._weights(row_weights, rows, 'row')
        self.__col_weights = self._weights(col_weights, cols, 'column')

        values.flags.writeable = False
        self.__values = values

    @staticmethod
    def _weights(weights: Optional[Sequence[float]], count: int, axis: str) -> np.ndarray:
        weights = np.full(count, 1.0 / count) if weights is None else np.asarray(weights, dtype=float)

        if weights.shape != (count,):
            raise StructuralError(f'Expected {count} {axis} weights, got shape {weights.shape}.')

        if np.any(weights <= 0) or not np.all(np.isfinite(weights)):
            raise DomainError(f'All {axis} weights must be finite and strictly positive.')

        weights = weights.copy()
        weights.flags.writeable = False

        return weights

    @property
    def col_weights(self) -> np.ndarray:
        return self.__col_weights

    @property
    def row_weights(self) -> np.ndarray:
        return self.__row_weights

    @property
    def shape(self) -> tuple[int, int]:
        return self.__values.shape

    @property
    def values(self) -> np.ndarray:
        return self.__values

    def whitened(self) -> np.ndarray:
        """``diag(sqrt(w)) F diag(sqrt(v))``; its Frobenius norm is the ambient norm."""
        return np.sqrt(self.__row_weights)[:, None] * self.__values * np.sqrt(self.__col_weights)[None, :]

    def norm(self) -> float:
        return float(np.linalg.norm(self.whitened()))

    def __repr__(self) -> str:
        return f'Matrix2D(shape={self.shape}, norm={self.norm():.6g})'


def load_matrix_csv(
        csv_file:    Union[str, Path],
        row_weights: Optional[Sequence[float]] = None,
        col_weights: Optional[Sequence[float]] = None
) -> Matrix2D:
    """Read a headerless CSV of numbers into a :class:`Matrix2D`."""
    csv_file = existing_file(csv_file, 'csv_file')
    frame = pd.read_csv(csv_file, header=None)

    try:
        values = frame.to_numpy(dtype=float)
    except ValueError as e:
        raise StructuralError(f'{csv_file} does not hold a numeric matrix: {e}') from e

    return Matrix2D(values, row_weights, col_weights)
