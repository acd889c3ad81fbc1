from __future__ import annotations

import math
from numbers import Real
from typing import Optional, Sequence, Union

import numpy as np

from chebygreedy.errors import DomainError, StructuralError


ArrayLike = Union[Sequence[float], np.ndarray]


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float, copy=True)
    array.flags.writeable = False
    return array


def lp_norms(values: np.ndarray, weights: np.ndarray, p: float, axis: int = 0) -> np.ndarray:
    """
    Weighted p-norms along ``axis``, rescaled by the largest entry to avoid
    overflow for large ``p``.

    Parameters:
        values (np.ndarray):
            A vector, or a matrix holding one vector per column (``axis=0``) or
            per row (``axis=1``).

        weights (np.ndarray):
            Quadrature weights, one per coordinate.

        p (float):
            The exponent.

        axis (int):
            The coordinate axis.

    Returns:
        np.ndarray:
            The norms; a 0-d array for vector input.
    """
    values = np.abs(np.asarray(values, dtype=float))
    scale = np.max(values, axis=axis, keepdims=True) if values.size else np.zeros_like(values)
    safe = np.where(scale > 0, scale, 1.0)
    shape = [1] * values.ndim
    shape[axis] = -1
    w = np.reshape(weights, shape)
    sums = np.sum(w * (values / safe) ** p, axis=axis, keepdims=True)
    norms = np.where(scale > 0, scale * sums ** (1.0 / p), 0.0)

    return np.squeeze(norms, axis=axis)


class GridSpace:
    """
    A finite-dimensional weighted L_p space.

    Models L_p([0,1)^d) sampled on a grid, or an abstract weighted l_p.

    Properties:
        dim (int):
            Number of coordinates ``n``.

        p (float):
            The exponent, ``1 < p < inf``.

        weights (np.ndarray):
            Read-only array of ``n`` positive quadrature weights.

        shape (Optional[tuple[int, ...]]):
            Per-axis grid sizes when the space is a tensor grid on [0,1)^d,
            otherwise ``None``.
    """
    def __init__(
            self,
            dim:     int,
            p:       float,
            weights: Optional[ArrayLike] = None,
            shape:   Optional[Sequence[int]] = None
    ):
        self.__dim     = None
        self.__p       = None
        self.__shape   = None
        self.__weights = None

        self.dim = dim
        self.p = p
        self.shape = shape
        self.weights = weights if weights is not None else np.full(self.dim, 1.0 / self.dim)

    @classmethod
    def uniform(cls, shape: Union[int, Sequence[int]], p: float) -> 'GridSpace':
        """
        Build a uniform tensor grid on [0,1)^d with probability weights.

        Parameters:
            shape (Union[int, Sequence[int]]):
                Points per axis; an int means d = 1.

            p (float):
                The exponent.

        Returns:
            GridSpace:
                The space. Coordinates are flattened in C order (axis 0 slowest).
        """
        if isinstance(shape, (int, np.integer)):
            shape = (int(shape),)

        shape = tuple(int(s) for s in shape)
        dim = math.prod(shape)

        return cls(dim, p, np.full(dim, 1.0 / dim), shape=shape)

    @property
    def d(self) -> Optional[int]:
        """Number of grid axes, or ``None`` for an abstract space."""
        return None if self.shape is None else len(self.shape)

    @property
    def dim(self) -> int:
        return self.__dim

    @dim.setter
    def dim(self, new: int):
        if self.__dim is not None:
            raise AttributeError('Dimension is already set and cannot be changed!')

        if isinstance(new, bool) or not isinstance(new, (int, np.integer)):
            raise StructuralError(f"Dimension must be an integer, not '{type(new)}'!")

        if new < 1:
            raise StructuralError('Dimension must be a positive integer.')

        self.__dim = int(new)

    @property
    def is_hilbert(self) -> bool:
        return self.p == 2.0

    @property
    def p(self) -> float:
        return self.__p

    @p.setter
    def p(self, new: float):
        if self.__p is not None:
            raise AttributeError('Exponent is already set and cannot be changed!')

        if isinstance(new, bool) or not isinstance(new, Real):
            raise StructuralError(f"Exponent must be a real number, not '{type(new)}'!")

        new = float(new)

        if not math.isfinite(new) or new <= 1.0:
            raise DomainError(f'Exponent p must lie in (1, inf); got {new}. p = 1 and p = inf are not uniformly smooth.')

        self.__p = new

    @property
    def shape(self) -> Optional[tuple[int, ...]]:
        return self.__shape

    @shape.setter
    def shape(self, new: Optional[Sequence[int]]):
        if self.__shape is not None:
            raise AttributeError('Grid shape is already set and cannot be changed!')

        if new is None:
            return

        new = tuple(int(s) for s in new)

        if not new or any(s < 1 for s in new):
            raise StructuralError('Grid shape entries must be positive integers.')

        if math.prod(new) != self.dim:
            raise StructuralError(f'Grid shape {new} does not match dimension {self.dim}.')

        self.__shape = new

    @property
    def weights(self) -> np.ndarray:
        return self.__weights

    @weights.setter
    def weights(self, new: ArrayLike):
        if self.__weights is not None:
            raise AttributeError('Weights are already set and cannot be changed!')

        new = np.asarray(new, dtype=float)

        if new.shape != (self.dim,):
            raise StructuralError(f'Expected {self.dim} weights, got shape {new.shape}.')

        if not np.all(np.isfinite(new)) or np.any(new <= 0):
            raise DomainError('All weights must be finite and strictly positive.')

        self.__weights = _frozen(new)

    def vector(self, values: ArrayLike) -> 'FunctionVector':
        """Bind ``values`` to this space."""
        return FunctionVector(values, self)

    def zeros(self) -> 'FunctionVector':
        return FunctionVector(np.zeros(self.dim), self)

    def grid_axes(self) -> list[np.ndarray]:
        """
        The sample points ``j / n_axis`` of every axis of a tensor grid.

        Raises:
            StructuralError:
                If the space is not a tensor grid.
        """
        if self.shape is None:
            raise StructuralError('This space has no grid shape.')

        return [np.arange(n) / n for n in self.shape]

    def _key(self) -> tuple:
        return self.dim, self.p, self.shape, self.weights.tobytes()

    def __eq__(self, other) -> bool:
        if self is other:
            return True

        if not isinstance(other, GridSpace):
            return NotImplemented

        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        grid = f', shape={self.shape}' if self.shape else ''
        return f'GridSpace(dim={self.dim}, p={self.p:g}{grid})'


class FunctionVector:
    """
    A vector of ``n`` samples bound to a :class:`GridSpace`.

    Properties:
        values (np.ndarray):
            Read-only sample values.

        space (GridSpace):
            The space the vector lives in.
    """
    def __init__(self, values: ArrayLike, space: GridSpace):
        if not isinstance(space, GridSpace):
            raise StructuralError('A FunctionVector must be bound to a GridSpace instance.')

        values = np.asarray(values, dtype=float)

        if values.shape != (space.dim,):
            raise StructuralError(f'Expected {space.dim} values, got shape {values.shape}.')

        if not np.all(np.isfinite(values)):
            raise DomainError('Function values must be finite.')

        self.__space  = space
        self.__values = _frozen(values)

    @property
    def space(self) -> GridSpace:
        return self.__space

    @property
    def values(self) -> np.ndarray:
        return self.__values

    def norm(self) -> float:
        return norm(self.space, self)

    def is_zero(self) -> bool:
        return not np.any(self.values)

    def _check_same_space(self, other: 'FunctionVector'):
        if not isinstance(other, FunctionVector):
            raise StructuralError(f"Expected a FunctionVector, not '{type(other)}'!")

        if other.space != self.space:
            raise StructuralError('Both vectors must be bound to the same space.')

    def __add__(self, other: 'FunctionVector') -> 'FunctionVector':
        self._check_same_space(other)
        return FunctionVector(self.values + other.values, self.space)

    def __sub__(self, other: 'FunctionVector') -> 'FunctionVector':
        self._check_same_space(other)
        return FunctionVector(self.values - other.values, self.space)

    def __mul__(self, scalar: float) -> 'FunctionVector':
        if not isinstance(scalar, Real):
            return NotImplemented

        return FunctionVector(self.values * float(scalar), self.space)

    __rmul__ = __mul__

    def __neg__(self) -> 'FunctionVector':
        return FunctionVector(-self.values, self.space)

    def __len__(self) -> int:
        return self.space.dim

    def __repr__(self) -> str:
        return f'FunctionVector(norm={self.norm():.6g}, space={self.space!r})'


def _values_in(space: GridSpace, f: Union[FunctionVector, ArrayLike]) -> np.ndarray:
    if isinstance(f, FunctionVector):
        if f.space != space:
            raise StructuralError('Vector is bound to a different space.')
        return f.values

    values = np.asarray(f, dtype=float)

    if values.shape != (space.dim,):
        raise StructuralError(f'Expected {space.dim} values, got shape {values.shape}.')

    return values


def norm(space: GridSpace, f: Union[FunctionVector, ArrayLike]) -> float:
    """
    The weighted p-norm ``(sum_i w_i |f_i|^p)^(1/p)``.

    Parameters:
        space (GridSpace):
            The ambient space.

        f (Union[FunctionVector, ArrayLike]):
            A vector bound to ``space`` (raw arrays of the right length are
            accepted too).

    Returns:
        float:
            The norm.
    """
    return float(lp_norms(_values_in(space, f), space.weights, space.p))


def norming_vector(space: GridSpace, g: Union[FunctionVector, ArrayLike]) -> np.ndarray:
    """
    The representer ``a`` of the norming functional: ``F_g(h) = a @ h``.

    ``a_i = w_i |s_i|^(p-1) sign(s_i)`` with ``s = g / ||g||``.

    Raises:
        DomainError:
            If ``g`` is the zero vector.
    """
    values = _values_in(space, g)
    g_norm = float(lp_norms(values, space.weights, space.p))

    if g_norm == 0.0:
        raise DomainError('There is no norming functional for 0.')

    s = values / g_norm

    if space.p == 2.0:
        return space.weights * s

    return space.weights * np.abs(s) ** (space.p - 1.0) * np.sign(s)


def norming_functional(
        space: GridSpace,
        g: Union[FunctionVector, ArrayLike],
        h: Union[FunctionVector, ArrayLike]
) -> float:
    """
    Evaluate the norming (peak) functional of ``g`` at ``h``.

    ``F_g(h) = ||g||^(1-p) sum_i w_i |g_i|^(p-1) sign(g_i) h_i``, so that
    ``F_g(g) = ||g||`` and ``|F_g(h)| <= ||h||``.

    Raises:
        DomainError:
            If ``g`` is the zero vector.
    """
    return float(norming_vector(space, g) @ _values_in(space, h))
