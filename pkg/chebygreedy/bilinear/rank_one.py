"""
Greedy rank-one approximation of bivariate functions in weighted L_2.

Each step extracts the best single product term ``u(x_1) v(x_2)`` of the
current residual by alternating power iteration and subtracts it. In L_2 the
best rank-one term is the leading Schmidt (singular) pair, so ``M`` steps
reproduce the truncated singular value decomposition.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from chebygreedy.bilinear.matrix import Matrix2D
from chebygreedy.errors import DomainError, NonConvergenceError
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)


@dataclass(frozen=True)
class RankOneConfig:
    """
    Properties:
        tol (float):
            Stationarity threshold on ``||R^T u - sigma v|| / ||R||``.

        max_iter (int):
            Power iterations per attempt.

        restarts (int):
            Restarts from random vectors after a stagnating attempt.

        seed (int):
            Seed of the restart vectors.
    """
    tol:      float = 1e-10
    max_iter: int = 100_000
    restarts: int = 5
    seed:     int = 0


@dataclass
class RankOneApproximation:
    """
    Properties:
        terms (list[tuple[np.ndarray, np.ndarray]]):
            ``(u_j, v_j)`` in grid values; ``f ~ sum_j outer(u_j, v_j)``.

        residual_norms (list[float]):
            Index 0 is ``||f||``, entry ``j`` the norm after ``j`` terms. Shorter
            than ``M + 1`` when the residual vanished early.

        stationarity (list[float]):
            Per term, ``||R^T u - sigma v|| / ||R||`` of the residual ``R`` it
            was extracted from.

        restarts (int):
            Restarts used over all steps.
    """
    terms:          list = field(default_factory=list)
    residual_norms: list = field(default_factory=list)
    stationarity:   list = field(default_factory=list)
    restarts:       int = 0

    def residual_norm_at(self, M: int) -> float:
        return self.residual_norms[min(M, len(self.residual_norms) - 1)]

    def approximation(self, M: int) -> np.ndarray:
        if not self.terms:
            raise DomainError('The approximation has no terms.')

        return sum(np.outer(u, v) for u, v in self.terms[:M])


def _leading_pair(residual: np.ndarray, start: np.ndarray, cfg: RankOneConfig) -> tuple[np.ndarray, np.ndarray, float, float, bool]:
    scale = np.linalg.norm(residual)
    v = start / np.linalg.norm(start)
    u = np.zeros(residual.shape[0])
    sigma = 0.0
    eta = np.inf

    for _ in range(cfg.max_iter):
        u = residual @ v
        norm_u = np.linalg.norm(u)

        if norm_u == 0.0:
            return u, v, 0.0, np.inf, False

        u /= norm_u
        w = residual.T @ u
        sigma = float(np.linalg.norm(w))
        eta = float(np.linalg.norm(w - sigma * v)) / scale
        next_v = w / sigma
        change = float(np.linalg.norm(next_v - v))
        v = next_v

        if eta <= cfg.tol:
            return u, v, sigma, eta, True

        if change < cfg.tol and eta > 10.0 * cfg.tol:
            break

    return u, v, sigma, eta, False


def greedy_rank_one(f: Matrix2D, M: int, cfg: RankOneConfig = RankOneConfig()) -> RankOneApproximation:
    """
    ``M`` steps of greedy rank-one approximation.

    Parameters:
        f (Matrix2D):
            The samples.

        M (int):
            Number of rank-one terms, at least 1.

        cfg (RankOneConfig):
            Power iteration settings.

    Returns:
        RankOneApproximation:
            Terms and residual norms.

    Raises:
        NonConvergenceError:
            If a step fails to reach ``cfg.tol`` after ``cfg.restarts`` restarts.
    """
    if M < 1:
        raise DomainError('M must be at least 1.')

    rng = np.random.default_rng(cfg.seed)
    residual = f.whitened()
    total = float(np.linalg.norm(residual))
    result = RankOneApproximation(residual_norms=[total])

    for step in range(M):
        if np.linalg.norm(residual) <= 1e-14 * total or total == 0.0:
            break

        start = residual[int(np.argmax(np.linalg.norm(residual, axis=1)))]
        attempt = 0

        while True:
            u, v, sigma, eta, converged = _leading_pair(residual, start, cfg)

            if converged:
                break

            if attempt >= cfg.restarts:
                raise NonConvergenceError(
                    f'Rank-one power iteration stagnated at step {step + 1} after {cfg.restarts} restarts.',
                    last_iterate=v,
                    gradient_norm=eta,
                    details={'step': step + 1, 'sigma': sigma},
                )

            attempt += 1
            result.restarts += 1
            log.warning('Rank-one step %d stagnated (eta=%.3e); restarting (%d/%d)', step + 1, eta, attempt, cfg.restarts)
            start = rng.standard_normal(residual.shape[1])

        sigma = float(u @ residual @ v)
        residual = residual - sigma * np.outer(u, v)
        result.terms.append((sigma * u / np.sqrt(f.row_weights), v / np.sqrt(f.col_weights)))
        result.stationarity.append(eta)
        result.residual_norms.append(float(np.linalg.norm(residual)))
        log.debug('Rank-one step %d: sigma=%.6g, residual %.6e', step + 1, sigma, result.residual_norms[-1])

    return result


def theta_m(f: Matrix2D, M: int) -> float:
    """
    Best ``M``-term rank-one approximation error in weighted L_2: the norm of
    the singular value tail of the whitened samples.
    """
    if M < 0:
        raise DomainError('M must be non-negative.')

    singular_values = np.linalg.svd(f.whitened(), compute_uv=False)

    return float(np.linalg.norm(singular_values[M:]))
