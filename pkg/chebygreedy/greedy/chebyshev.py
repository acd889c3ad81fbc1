"""
Best approximation from a finite-dimensional subspace in the ambient L_p norm.

For ``p = 2`` this is weighted least squares. Otherwise the smooth convex
objective ``sum_i w_i |f_i - (U c)_i|^p`` is minimized by damped Newton steps
with an IRLS-type Hessian, and the answer is certified by the first-order
condition: the norming functional of the residual vanishes on the span.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
import scipy.linalg

from chebygreedy.errors import NonConvergenceError, StructuralError
from chebygreedy.models.space import FunctionVector, GridSpace, lp_norms, norming_vector
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)

# Residuals below this (relative to ||f||) are round-off; their norming functional carries no information.
ROUNDOFF_FLOOR = 1e-13


@dataclass(frozen=True)
class ChebyshevConfig:
    """
    Settings of the Chebyshev projection solver and of greedy termination.

    Properties:
        kkt_tol (float):
            Certificate threshold on ``max_j |F_residual(u_j)| / ||u_j||``.

        max_iter (int):
            Newton iteration budget (p != 2).

        residual_tol (float):
            Greedy runs stop once ``||f_m|| <= residual_tol * ||f_0||``.

        clamp (float):
            Lower clamp on ``|r_i| / ||f||`` inside the Hessian weights
            ``|r_i|**(p - 2)`` when ``p < 2``.

        rank_tol (float):
            Relative pivot threshold below which span elements count as
            linearly dependent (p = 2 Gram rank check).
    """
    kkt_tol:      float = 1e-10
    max_iter:     int = 200
    residual_tol: float = 1e-10
    clamp:        float = 1e-12
    rank_tol:     float = 1e-12

    def tightened(self, kkt_tol: float) -> 'ChebyshevConfig':
        return ChebyshevConfig(kkt_tol, self.max_iter, self.residual_tol, self.clamp, self.rank_tol)


@dataclass(frozen=True)
class ChebyshevProjection:
    """Solver output: coefficients, residual, certificate and work done."""
    coefficients: np.ndarray
    residual:     FunctionVector
    kkt:          float
    iterations:   int
    rank:         int

    @property
    def distance(self) -> float:
        return self.residual.norm()


def _as_matrix(span_elements: Union[Sequence[FunctionVector], np.ndarray], space: GridSpace) -> np.ndarray:
    if isinstance(span_elements, np.ndarray):
        matrix = np.asarray(span_elements, dtype=float)
        if matrix.ndim == 1:
            matrix = matrix[:, None]
    else:
        columns = []
        for element in span_elements:
            if isinstance(element, FunctionVector):
                if element.space != space:
                    raise StructuralError('Span element is bound to a different space.')
                columns.append(element.values)
            else:
                columns.append(np.asarray(element, dtype=float))
        matrix = np.column_stack(columns) if columns else np.zeros((space.dim, 0))

    if matrix.shape[0] != space.dim:
        raise StructuralError(f'Span elements must have {space.dim} entries, got {matrix.shape[0]}.')

    return matrix


def independent_columns(whitened: np.ndarray, rank_tol: float = 1e-12) -> np.ndarray:
    """
    Indices (sorted) of a maximal linearly independent subset of the columns.

    Uses QR with column pivoting on the p = 2 whitened columns.
    """
    if whitened.shape[1] == 0:
        return np.zeros(0, dtype=int)

    _, r, pivots = scipy.linalg.qr(whitened, mode='economic', pivoting=True)
    diagonal = np.abs(np.diag(r))

    if diagonal.size == 0 or diagonal[0] == 0.0:
        return np.zeros(0, dtype=int)

    rank = int(np.sum(diagonal > rank_tol * diagonal[0]))

    return np.sort(pivots[:rank])


def kkt_residual(space: GridSpace, residual: np.ndarray, span: np.ndarray, floor: float = 0.0) -> float:
    """``max_j |F_residual(u_j)| / ||u_j||``; zero for a residual of norm at most ``floor``."""
    if span.shape[1] == 0 or not np.any(residual):
        return 0.0

    if floor > 0.0 and float(lp_norms(residual, space.weights, space.p)) <= floor:
        return 0.0

    scale = lp_norms(span, space.weights, space.p, axis=0)
    scale = np.where(scale > 0, scale, 1.0)

    return float(np.max(np.abs(norming_vector(space, residual) @ span) / scale))


def _objective(space: GridSpace, residual: np.ndarray) -> float:
    return float(space.weights @ np.abs(residual) ** space.p)


def _newton(space: GridSpace, target: np.ndarray, span: np.ndarray, start: np.ndarray, cfg: ChebyshevConfig):
    p = space.p
    w = space.weights
    c = start.copy()
    residual = target - span @ c
    phi = _objective(space, residual)
    kkt = kkt_residual(space, residual, span, ROUNDOFF_FLOOR)
    iterations = 0

    while kkt > cfg.kkt_tol:
        if iterations >= cfg.max_iter:
            raise NonConvergenceError(
                f'Chebyshev projection did not reach kkt_tol={cfg.kkt_tol:g} in {cfg.max_iter} iterations (p={p:g}).',
                last_iterate=c,
                gradient_norm=kkt,
            )

        iterations += 1
        magnitude = np.abs(residual)
        gradient = -p * span.T @ (w * magnitude ** (p - 1.0) * np.sign(residual))
        curvature = w * np.maximum(magnitude, cfg.clamp) ** (p - 2.0)
        hessian = p * (p - 1.0) * (span.T * curvature) @ span
        hessian[np.diag_indices_from(hessian)] += 1e-14 * max(np.trace(hessian), 1e-300) / hessian.shape[0]

        try:
            step = scipy.linalg.solve(hessian, -gradient, assume_a='pos')
        except (np.linalg.LinAlgError, scipy.linalg.LinAlgError):
            step = np.linalg.lstsq(hessian, -gradient, rcond=None)[0]

        slope = float(gradient @ step)
        alpha = 1.0
        noise = 1e-14 * abs(phi)

        while True:
            trial = c + alpha * step
            trial_residual = target - span @ trial
            trial_phi = _objective(space, trial_residual)

            if trial_phi <= phi + 1e-4 * alpha * slope + noise or alpha < 1e-12:
                break

            alpha *= 0.5

        c, residual, phi = trial, trial_residual, trial_phi
        kkt = kkt_residual(space, residual, span, ROUNDOFF_FLOOR)

    log.debug('Newton projection converged in %d iterations (p=%g, kkt=%.3e)', iterations, p, kkt)

    return c, iterations, kkt


def chebyshev_projection(
        f:             Union[FunctionVector, np.ndarray],
        span_elements: Union[Sequence[FunctionVector], np.ndarray],
        space:         GridSpace,
        cfg:           ChebyshevConfig = ChebyshevConfig()
) -> ChebyshevProjection:
    """
    Best approximation of ``f`` from ``span(span_elements)`` with its certificate.

    Numerically dependent span elements (p = 2 Gram rank check) get a zero
    coefficient; the span is unchanged by dropping them.

    Raises:
        NonConvergenceError:
            If ``p != 2`` and the KKT certificate is not reached in
            ``cfg.max_iter`` Newton iterations.
    """
    target = f.values if isinstance(f, FunctionVector) else np.asarray(f, dtype=float)

    if isinstance(f, FunctionVector) and f.space != space:
        raise StructuralError('f is bound to a different space.')

    if target.shape != (space.dim,):
        raise StructuralError(f'f must have {space.dim} entries, got shape {target.shape}.')

    span = _as_matrix(span_elements, space)
    coefficients = np.zeros(span.shape[1])
    scale = float(lp_norms(target, space.weights, space.p))

    if span.shape[1] == 0 or scale == 0.0:
        return ChebyshevProjection(coefficients, FunctionVector(target, space), 0.0, 0, 0)

    root_w = np.sqrt(space.weights)
    keep = independent_columns(root_w[:, None] * span, cfg.rank_tol)
    basis = span[:, keep]

    least_squares = np.linalg.lstsq(root_w[:, None] * basis, root_w * target / scale, rcond=None)[0]

    if space.p == 2.0:
        solution, iterations = least_squares, 0
        kkt = kkt_residual(space, target / scale - basis @ solution, basis, ROUNDOFF_FLOOR)
        if kkt > cfg.kkt_tol:
            log.warning('Least-squares residual is only orthogonal to %.3e (kkt_tol=%g)', kkt, cfg.kkt_tol)
    else:
        solution, iterations, kkt = _newton(space, target / scale, basis, least_squares, cfg)

    coefficients[keep] = scale * solution
    residual = target - basis @ (scale * solution)

    return ChebyshevProjection(coefficients, FunctionVector(residual, space), kkt, iterations, int(keep.size))


def chebyshev_project(
        f:             Union[FunctionVector, np.ndarray],
        span_elements: Union[Sequence[FunctionVector], np.ndarray],
        space:         GridSpace,
        cfg:           ChebyshevConfig = ChebyshevConfig()
) -> tuple[np.ndarray, FunctionVector]:
    """
    Minimize ``||f - sum_j c_j u_j||_p`` over the coefficients ``c``.

    Parameters:
        f (Union[FunctionVector, np.ndarray]):
            The element to approximate.

        span_elements (Union[Sequence[FunctionVector], np.ndarray]):
            The spanning elements, as vectors or as the columns of a matrix.

        space (GridSpace):
            The ambient space.

        cfg (ChebyshevConfig):
            Solver settings.

    Returns:
        tuple[np.ndarray, FunctionVector]:
            The coefficients and the residual ``f - sum_j c_j u_j``.
    """
    projection = chebyshev_projection(f, span_elements, space, cfg)
    return projection.coefficients, projection.residual
