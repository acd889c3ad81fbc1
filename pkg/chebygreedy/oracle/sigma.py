"""
Best m-term approximation error by exhaustive support search.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from chebygreedy.errors import DomainError, OracleCapExceeded, StructuralError
from chebygreedy.greedy.chebyshev import ChebyshevConfig, chebyshev_projection
from chebygreedy.models.dictionaries import Dictionary
from chebygreedy.models.space import FunctionVector
from chebygreedy.models.traces import GreedyTrace
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)

# relative tolerances on ||f_0||
RECOVERED_TOL = 1e-9
ZERO_SIGMA_TOL = 1e-12


@dataclass(frozen=True)
class OracleConfig:
    """
    Properties:
        cap (int):
            Largest number of supports the exhaustive search may visit.

        kkt_tol (float):
            KKT tolerance of the inner Chebyshev solves (p != 2).

        rank_tol (float):
            Relative ``R`` diagonal below which a p = 2 support is solved by
            least squares instead of QR.

        batch (int):
            Supports per vectorized QR block.
    """
    cap:      int = 500_000
    kkt_tol:  float = 1e-11
    rank_tol: float = 1e-12
    batch:    int = 2048


class OracleResult(NamedTuple):
    value:   float
    support: tuple[int, ...]


def _check(f: FunctionVector, dictionary: Dictionary, m: int):
    if f.space != dictionary.space:
        raise StructuralError('f and the dictionary live in different spaces.')

    if m < 0:
        raise StructuralError('m must be non-negative.')


def _pick(values: np.ndarray, supports: list[tuple[int, ...]]) -> OracleResult:
    best = float(np.min(values))
    # ties within round-off go to the lexicographically first support
    tied = np.flatnonzero(values <= best * (1.0 + 1e-12) + 1e-300)
    return OracleResult(best, supports[int(tied[0])])


def _hilbert_residuals(y: np.ndarray, psi: np.ndarray, supports: list[tuple[int, ...]], cfg: OracleConfig) -> np.ndarray:
    values = np.empty(len(supports))

    for start in range(0, len(supports), cfg.batch):
        block = np.array(supports[start:start + cfg.batch])
        stack = np.transpose(psi[:, block], (1, 0, 2))
        q, r = np.linalg.qr(stack)
        residuals = y[None, :] - np.einsum('bij,bj->bi', q, np.einsum('bij,i->bj', q, y))
        values[start:start + len(block)] = np.linalg.norm(residuals, axis=1)

        diagonal = np.abs(np.diagonal(r, axis1=1, axis2=2))
        deficient = np.flatnonzero(np.min(diagonal, axis=1) <= cfg.rank_tol * np.max(diagonal, axis=1))

        for local in deficient:
            columns = stack[local]
            coefficients = np.linalg.lstsq(columns, y, rcond=None)[0]
            values[start + local] = np.linalg.norm(y - columns @ coefficients)

    return values


def sigma_m_exact(
        f:          FunctionVector,
        dictionary: Dictionary,
        m:          int,
        cfg:        OracleConfig = OracleConfig()
) -> OracleResult:
    """
    ``sigma_m(f) = min_{|S| <= m} min_c ||f - sum_S c_i g_i||`` by visiting every support.

    Supports of size ``min(m, N)`` suffice since spans are nested. At ``p = 2``
    supports are solved in batches by QR; otherwise by the Chebyshev solver
    with ``cfg.kkt_tol``.

    Returns:
        OracleResult:
            The value and the lexicographically first minimizing support.

    Raises:
        OracleCapExceeded:
            If ``C(N, m)`` exceeds ``cfg.cap``.
    """
    _check(f, dictionary, m)

    if m == 0:
        return OracleResult(f.norm(), ())

    size = min(m, dictionary.size)
    total = math.comb(dictionary.size, size)

    if total > cfg.cap:
        raise OracleCapExceeded(
            f'The exhaustive oracle would visit C({dictionary.size}, {size}) = {total} supports, more than the cap '
            f'{cfg.cap}. Reduce the dictionary size N or the term count m.',
            supports=total,
            cap=cfg.cap,
        )

    supports = list(itertools.combinations(range(dictionary.size), size))
    space = dictionary.space

    if space.is_hilbert:
        y = np.sqrt(space.weights) * f.values
        values = _hilbert_residuals(y, dictionary.whitened, supports, cfg)
    else:
        solver = ChebyshevConfig().tightened(cfg.kkt_tol)
        values = np.array([
            chebyshev_projection(f, dictionary.columns(support), space, solver).distance for support in supports
        ])

    result = _pick(values, supports)
    log.debug('sigma_%d = %.6g on %s (%d supports)', m, result.value, result.support, total)

    return result


def is_orthonormal(dictionary: Dictionary, tol: float = 1e-10) -> bool:
    """Whether the dictionary is orthonormal in the weighted p = 2 pairing (and ``p = 2``)."""
    if not dictionary.space.is_hilbert:
        return False

    return bool(np.max(np.abs(dictionary.gram - np.eye(dictionary.size))) <= tol)


def sigma_m_orthonormal(f: FunctionVector, dictionary: Dictionary, m: int) -> OracleResult:
    """
    ``sigma_m`` for an orthonormal dictionary at ``p = 2``: drop all but the
    ``m`` largest coefficients (lowest index first on ties).

    Raises:
        DomainError:
            If the dictionary is not orthonormal or ``p != 2``.
    """
    _check(f, dictionary, m)

    if not is_orthonormal(dictionary):
        raise DomainError('The orthonormal fast path needs an orthonormal dictionary at p = 2.')

    y = np.sqrt(dictionary.space.weights) * f.values
    coefficients = dictionary.whitened.T @ y
    order = np.argsort(-np.abs(coefficients), kind='stable')[:min(m, dictionary.size)]
    residual = y - dictionary.whitened[:, order] @ coefficients[order]

    return OracleResult(float(np.linalg.norm(residual)), tuple(sorted(int(i) for i in order)))


def sigma_m(f: FunctionVector, dictionary: Dictionary, m: int, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """The orthonormal fast path when it applies, exhaustive search otherwise."""
    if is_orthonormal(dictionary):
        return sigma_m_orthonormal(f, dictionary, m)

    return sigma_m_exact(f, dictionary, m, cfg)


def lebesgue_ratio(
        trace:           GreedyTrace,
        f0:              FunctionVector,
        dictionary:      Dictionary,
        m:               int,
        iterations_used: int,
        cfg:             OracleConfig = OracleConfig(),
        planted_support: Optional[Sequence[int]] = None,
        sigma:           Optional[float] = None
) -> float:
    """
    The measured Lebesgue constant ``||f_{iterations_used}|| / sigma_m(f_0)``.

    When ``sigma_m = 0`` the ratio is 1 if the residual vanishes (and, with
    ``planted_support``, the selection covers it) and ``inf`` otherwise.

    Parameters:
        sigma (Optional[float]):
            A precomputed ``sigma_m(f_0)``; computed with :func:`sigma_m` when omitted.
    """
    if iterations_used < 0:
        raise StructuralError('iterations_used must be non-negative.')

    scale = f0.norm()

    if scale == 0.0:
        return 1.0

    residual = trace.residual_norm_at(iterations_used)
    sigma = sigma_m(f0, dictionary, m, cfg).value if sigma is None else sigma

    if sigma > ZERO_SIGMA_TOL * scale:
        return residual / sigma

    covered = planted_support is None or set(planted_support) <= set(trace.selected[:iterations_used])

    return 1.0 if residual <= RECOVERED_TOL * scale and covered else math.inf
