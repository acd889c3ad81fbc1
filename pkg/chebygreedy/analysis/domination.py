from __future__ import annotations

import math
from typing import Optional

import numpy as np
import scipy.linalg

from chebygreedy.analysis.ascent import maximize_norm_ratio
from chebygreedy.analysis.supports import SAMPLED, AnalysisConfig, Estimate, combine, supports_of_size
from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.models.dictionaries import Dictionary
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)


def check_domination(
        d1:     Dictionary,
        d2:     Dictionary,
        D:      int,
        cap:    Optional[int] = None,
        config: AnalysisConfig = AnalysisConfig()
) -> Estimate:
    """
    Smallest ``B`` with ``||sum_L c_i g1_i|| <= B ||sum_L c_i g2_i||`` for all ``|L| <= D``.

    The two dictionaries are index aligned and may live in different spaces.
    Exact (generalized eigenvalues per support) when both spaces have
    ``p = 2``; otherwise a multi-start ascent lower bound.

    Returns:
        Estimate:
            ``B``, or ``inf`` if some support of ``d2`` is linearly dependent.
    """
    if d1.size != d2.size:
        raise StructuralError(f'Dictionaries must have equal sizes; got {d1.size} and {d2.size}.')

    if not 1 <= D <= d1.size:
        raise StructuralError(f'Need 1 <= D <= {d1.size}; got D={D}.')

    rng = config.rng()
    # the ratio only grows with the support, so |L| = D suffices
    supports, method = supports_of_size(d1.size, D, config.cap if cap is None else cap, rng)
    hilbert = d1.space.is_hilbert and d2.space.is_hilbert
    best = 0.0

    for support in supports:
        lower = d2.gram[np.ix_(support, support)]
        eigenvalues = np.linalg.eigvalsh(lower)

        if eigenvalues[0] <= config.rank_tol * eigenvalues[-1]:
            log.warning('Support %s of the dominating dictionary is linearly dependent; B = inf', support)
            return Estimate(math.inf, method)

    if hilbert:
        for support in supports:
            upper = d1.gram[np.ix_(support, support)]
            lower = d2.gram[np.ix_(support, support)]
            best = max(best, float(scipy.linalg.eigh(upper, lower, eigvals_only=True)[-1]))

        return Estimate(math.sqrt(best), method)

    if len(supports) > config.ascent_supports:
        picks = sorted(rng.choice(len(supports), size=config.ascent_supports, replace=False))
        supports = [supports[i] for i in picks]

    for support in supports:
        ratio = maximize_norm_ratio(d1.columns(support), d1.space, d2.columns(support), d2.space,
                                    config.ascent_starts, config.ascent_iters, rng)
        best = max(best, ratio)

    return Estimate(best, SAMPLED)


def check_equivalence(
        d1:     Dictionary,
        d2:     Dictionary,
        D:      int,
        cap:    Optional[int] = None,
        config: AnalysisConfig = AnalysisConfig()
) -> tuple[float, float, str]:
    """
    Constants ``(E1, E2)`` with ``E1 ||sum c g1|| <= ||sum c g2|| <= E2 ||sum c g1||`` on ``|L| <= D``.

    Returns:
        tuple[float, float, str]:
            ``E1``, ``E2`` and the combined method tag.
    """
    forward = check_domination(d1, d2, D, cap, config)
    backward = check_domination(d2, d1, D, cap, config)
    e1 = 0.0 if math.isinf(forward.value) else 1.0 / forward.value

    return e1, backward.value, combine([forward.method, backward.method])


def transfer_constants(
        B:  Optional[float] = None,
        E1: Optional[float] = None,
        E2: Optional[float] = None,
        C1: Optional[float] = None,
        V:  Optional[float] = None,
        U:  Optional[float] = None
) -> dict[str, float]:
    """
    Constants a dictionary inherits from one it dominates or is equivalent to.

    If ``d2`` D-dominates ``d1`` with constant ``B``, ``d2`` has ``C1 * B`` and
    ``V * B``. If they are D-equivalent with ``(E1, E2)``, ``d2`` has
    ``U * E2 / E1``. Only the constants that can be derived from the given
    arguments are returned.
    """
    transferred = {}

    if B is not None:
        if B < 0:
            raise DomainError('B must be non-negative.')

        if C1 is not None:
            transferred['C1'] = C1 * B

        if V is not None:
            transferred['V'] = V * B

    if U is not None and E1 is not None and E2 is not None:
        if E1 <= 0:
            raise DomainError('E1 must be positive.')

        transferred['U'] = U * E2 / E1

    return transferred
