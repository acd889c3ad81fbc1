from __future__ import annotations

from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.models.space import FunctionVector, GridSpace, lp_norms


UNIT_NORM_TOLERANCE = 1e-12


class Dictionary:
    """
    An ordered family of unit-norm elements of a :class:`GridSpace`.

    Elements are stored densely as the columns of an ``n x N`` matrix.

    Properties:
        KINDS (list):
            Provenance tags a dictionary can carry.
                - 'trigonometric';
                    Products of 1, cos, sin on a tensor grid.
                - 'haar';
                    The (tensorized) Haar system on a dyadic grid.
                - 'gaussian';
                    I.i.d. standard normal columns.
                - 'custom';
                    User supplied columns.

        space (GridSpace):
            The ambient space; every element has norm one in it.

        matrix (np.ndarray):
            Read-only ``n x N`` array of element values.

        labels (tuple[str, ...]):
            One unique label per element.

        kind (str):
            One of ``KINDS``.

        params (dict):
            Builder parameters, enough to rebuild the dictionary together with
            ``kind`` and ``seed``.

        seed (Optional[int]):
            The seed a random builder used.
    """
    KINDS = ['trigonometric', 'haar', 'gaussian', 'custom']

    def __init__(
            self,
            space:  GridSpace,
            matrix: np.ndarray,
            labels: Sequence[str],
            kind:   str = 'custom',
            params: Optional[Mapping] = None,
            seed:   Optional[int] = None
    ):
        self.__kind   = None
        self.__labels = None
        self.__matrix = None
        self.__space  = None

        self.space = space
        self.matrix = matrix
        self.labels = labels
        self.kind = kind

        self.__params = dict(params or {})
        self.__seed = None if seed is None else int(seed)

    @property
    def kind(self) -> str:
        return self.__kind

    @kind.setter
    def kind(self, new: str):
        if self.__kind is not None:
            raise AttributeError('Dictionary kind is already set and cannot be changed!')

        if new not in self.KINDS:
            raise StructuralError(f"Unknown dictionary kind '{new}'; expected one of {self.KINDS}.")

        self.__kind = new

    @property
    def labels(self) -> tuple[str, ...]:
        return self.__labels

    @labels.setter
    def labels(self, new: Sequence[str]):
        if self.__labels is not None:
            raise AttributeError('Labels are already set and cannot be changed!')

        new = tuple(str(label) for label in new)

        if len(new) != self.size:
            raise StructuralError(f'Expected {self.size} labels, got {len(new)}.')

        if len(set(new)) != len(new):
            raise StructuralError('Dictionary labels must be unique.')

        self.__labels = new

    @property
    def matrix(self) -> np.ndarray:
        return self.__matrix

    @matrix.setter
    def matrix(self, new: np.ndarray):
        if self.__matrix is not None:
            raise AttributeError('Dictionary elements are already set and cannot be changed!')

        new = np.array(new, dtype=float, copy=True)

        if new.ndim != 2 or new.shape[0] != self.space.dim or new.shape[1] < 1:
            raise StructuralError(f'Expected a {self.space.dim} x N matrix with N >= 1, got shape {new.shape}.')

        norms = lp_norms(new, self.space.weights, self.space.p, axis=0)

        if np.any(np.abs(norms - 1.0) > UNIT_NORM_TOLERANCE):
            worst = int(np.argmax(np.abs(norms - 1.0)))
            raise DomainError(f'Element {worst} has norm {norms[worst]!r}; every element must have norm one.')

        new.flags.writeable = False
        self.__matrix = new

    @property
    def params(self) -> dict:
        return dict(self.__params)

    @property
    def seed(self) -> Optional[int]:
        return self.__seed

    @property
    def space(self) -> GridSpace:
        return self.__space

    @space.setter
    def space(self, new: GridSpace):
        if self.__space is not None:
            raise AttributeError('Space is already set and cannot be changed!')

        if not isinstance(new, GridSpace):
            raise StructuralError('Space must be a GridSpace instance.')

        self.__space = new

    @property
    def size(self) -> int:
        """Number of elements ``N``."""
        return 0 if self.__matrix is None else self.__matrix.shape[1]

    @property
    def descriptor(self) -> dict:
        """The JSON-ready ``{kind, params, seed}`` descriptor."""
        return {'kind': self.kind, 'params': self.params, 'seed': self.seed}

    @property
    def elements(self) -> list[FunctionVector]:
        return [self.element(i) for i in range(self.size)]

    @cached_property
    def whitened(self) -> np.ndarray:
        """Columns scaled by ``sqrt(w)``; Euclidean geometry of the p = 2 pairing."""
        whitened = np.sqrt(self.space.weights)[:, None] * self.matrix
        whitened.flags.writeable = False
        return whitened

    @cached_property
    def gram(self) -> np.ndarray:
        """Weighted p = 2 Gram matrix ``G_ij = sum_k w_k g_i(k) g_j(k)``."""
        gram = self.whitened.T @ self.whitened
        gram.flags.writeable = False
        return gram

    def check_index(self, index: int) -> int:
        if isinstance(index, bool) or not isinstance(index, (int, np.integer)):
            raise StructuralError(f"Element index must be an integer, not '{type(index)}'!")

        if not 0 <= index < self.size:
            raise StructuralError(f'Element index {index} out of range for a dictionary of size {self.size}.')

        return int(index)

    def columns(self, indices: Iterable[int]) -> np.ndarray:
        """The ``n x len(indices)`` sub-matrix of the given elements."""
        indices = [self.check_index(i) for i in indices]
        return self.matrix[:, indices]

    def element(self, index: int) -> FunctionVector:
        return FunctionVector(self.matrix[:, self.check_index(index)], self.space)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f'Dictionary(kind={self.kind!r}, size={self.size}, space={self.space!r})'


class SparseRepresentation:
    """
    Coefficients ``x_i`` on a finite support ``T``; ``f = sum_{i in T} x_i g_i``.

    Zero coefficients are dropped, so ``len(support) == len(coefficients)``.
    """
    def __init__(self, coefficients: Optional[Mapping[int, float]] = None):
        cleaned = {}

        for index, value in dict(coefficients or {}).items():
            if isinstance(index, bool) or not isinstance(index, (int, np.integer)) or index < 0:
                raise StructuralError(f'Support indices must be non-negative integers; got {index!r}.')

            value = float(value)

            if not np.isfinite(value):
                raise DomainError('Coefficients must be finite.')

            if value != 0.0:
                cleaned[int(index)] = value

        self.__coefficients = dict(sorted(cleaned.items()))

    @classmethod
    def from_arrays(cls, indices: Sequence[int], values: Sequence[float]) -> 'SparseRepresentation':
        indices = list(indices)
        values = list(values)

        if len(indices) != len(values):
            raise StructuralError('indices and values must have equal length.')

        if len(set(int(i) for i in indices)) != len(indices):
            raise StructuralError('Support indices must be distinct.')

        return cls(dict(zip(indices, values)))

    @property
    def coefficients(self) -> dict[int, float]:
        return dict(self.__coefficients)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.__coefficients)

    @property
    def size(self) -> int:
        """``K = |T|``."""
        return len(self.__coefficients)

    @property
    def l1_norm(self) -> float:
        return float(sum(abs(v) for v in self.__coefficients.values()))

    def restricted(self, indices: Iterable[int]) -> 'SparseRepresentation':
        """The part ``f_A`` on ``A = indices``."""
        keep = set(indices)
        return SparseRepresentation({i: v for i, v in self.__coefficients.items() if i in keep})

    def scaled(self, factor: float) -> 'SparseRepresentation':
        return SparseRepresentation({i: factor * v for i, v in self.__coefficients.items()})

    def merge(self, other: 'SparseRepresentation') -> 'SparseRepresentation':
        """Union of two representations with disjoint supports."""
        if set(self.support) & set(other.support):
            raise StructuralError('Only representations with disjoint supports can be merged.')

        return SparseRepresentation({**self.__coefficients, **other.coefficients})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseRepresentation):
            return NotImplemented

        return self.__coefficients == other.coefficients

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f'SparseRepresentation({self.__coefficients})'


def synthesize(dictionary: Dictionary, rep: SparseRepresentation) -> FunctionVector:
    """
    The linear combination ``sum_{i in T} x_i g_i``.

    Raises:
        StructuralError:
            If a support index is out of range.
    """
    if not rep.size:
        return dictionary.space.zeros()

    support = [dictionary.check_index(i) for i in rep.support]
    values = np.array([rep.coefficients[i] for i in rep.support])

    return FunctionVector(dictionary.matrix[:, support] @ values, dictionary.space)
