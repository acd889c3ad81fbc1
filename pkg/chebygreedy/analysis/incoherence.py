from __future__ import annotations

import math
from typing import Optional

import numpy as np

from chebygreedy.analysis.supports import AnalysisConfig, Estimate, supports_of_size
from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.models.dictionaries import Dictionary
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)

_BATCH = 4096


def hilbert_gram(dictionary: Dictionary) -> np.ndarray:
    """Weighted p = 2 Gram matrix of the columns renormalized in the p = 2 norm."""
    gram = np.array(dictionary.gram, copy=True)
    scale = np.sqrt(np.diag(gram))
    return gram / np.outer(scale, scale)


def coherence(dictionary: Dictionary) -> float:
    """
    ``max_{i != j} |<g_i, g_j>|`` in the weighted p = 2 pairing.

    Columns are renormalized in the p = 2 norm first, so the value is the
    classical coherence for every ambient ``p``.

    Raises:
        DomainError:
            For a dictionary with a single element.
    """
    if dictionary.size < 2:
        raise DomainError('Coherence needs at least two elements.')

    gram = np.abs(hilbert_gram(dictionary))
    np.fill_diagonal(gram, 0.0)

    return float(min(1.0, np.max(gram)))


def rip_delta(dictionary: Dictionary, s: int, cap: Optional[int] = None, config: AnalysisConfig = AnalysisConfig()) -> Estimate:
    """
    The restricted isometry constant of order ``s``.

    ``delta = max_S max(1 - lambda_min(G_S), lambda_max(G_S) - 1)`` over supports
    ``|S| = s``; by eigenvalue interlacing smaller supports never do worse.
    Exact when ``C(N, s) <= cap``, else a lower bound over ``cap`` random
    supports.

    Raises:
        DomainError:
            If ``s == 0`` or the ambient exponent is not 2.
    """
    if s < 1:
        raise DomainError('The sparsity s must be at least 1.')

    if s > dictionary.size:
        raise StructuralError(f's={s} exceeds the dictionary size {dictionary.size}.')

    if not dictionary.space.is_hilbert:
        raise DomainError('The restricted isometry constant is defined for p = 2 only.')

    cap = config.cap if cap is None else cap
    supports, method = supports_of_size(dictionary.size, s, cap, config.rng())
    gram = dictionary.gram
    delta = 0.0

    for start in range(0, len(supports), _BATCH):
        block = np.array(supports[start:start + _BATCH])
        blocks = gram[block[:, :, None], block[:, None, :]]
        eigenvalues = np.linalg.eigvalsh(blocks)
        delta = max(delta, float(np.max(1.0 - eigenvalues[:, 0])), float(np.max(eigenvalues[:, -1] - 1.0)))

    log.debug('rip_delta(s=%d) = %.6g over %d supports (%s)', s, delta, len(supports), method)

    return Estimate(delta, method)


def unconditionality_from_rip(delta: float) -> float:
    """
    ``U = ((1 + delta) / (1 - delta)) ** (1/2)``, the unconditionality constant
    of a Riesz dictionary with parameter ``delta``.

    Raises:
        DomainError:
            Unless ``0 <= delta < 1``.
    """
    if not 0.0 <= delta < 1.0:
        raise DomainError(f'delta must lie in [0, 1); got {delta}.')

    return math.sqrt((1.0 + delta) / (1.0 - delta))
