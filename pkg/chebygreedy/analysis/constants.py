"""
The Nikol'skii (C1), unconditionality (U) and l1-incoherence (V) constants of
a dictionary.

At ``p = 2`` every constant is exact: with ``H = G_B^{-1}``,

- ``U(A, B)**2`` is the top eigenvalue of ``G_AA H_AA``;
- ``max_c sum_A |c_i| / ||sum_B c_i g_i|| = max_eps sqrt(eps^T H_AA eps)``.

At other ``p`` the l1 ratios stay exact through duality: for a sign pattern
``eps`` on ``A``, ``max eps^T c_A / ||sum_B c_i g_i||`` is the reciprocal of
``min ||sum_B c_i g_i||`` subject to ``eps^T c_A = 1``, the distance from
``eps_j g_j`` to ``span{g_i - eps_i eps_j g_j (i in A, i != j), g_l (l in B \\ A)}``,
which is a Chebyshev projection. ``U`` has no such form and is estimated from
below by multi-start ascent.

Supports with linearly dependent elements give the ``inf`` sentinel.
"""
from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence

import numpy as np

from chebygreedy.analysis.ascent import maximize_norm_ratio
from chebygreedy.analysis.supports import (
    EXACT,
    SAMPLED,
    AnalysisConfig,
    Estimate,
    combine,
    sign_patterns,
    support_pairs,
    supports_up_to,
)
from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.greedy.chebyshev import ChebyshevConfig, chebyshev_projection
from chebygreedy.models.dictionaries import Dictionary, SparseRepresentation, synthesize
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)

PROJECTION = ChebyshevConfig().tightened(1e-11)


def _check_parameters(dictionary: Dictionary, K: int, D: Optional[int] = None, r: Optional[float] = None):
    if K < 1:
        raise DomainError('K must be at least 1.')

    if K > dictionary.size:
        raise StructuralError(f'K={K} exceeds the dictionary size {dictionary.size}.')

    if D is not None and not K <= D <= dictionary.size:
        raise StructuralError(f'Need K <= D <= {dictionary.size}; got K={K}, D={D}.')

    if r is not None and not 0.0 < r <= 1.0:
        raise DomainError(f'The exponent r must lie in (0, 1]; got {r}.')


def inverse_gram(dictionary: Dictionary, support: Sequence[int], rank_tol: float) -> Optional[np.ndarray]:
    """``G_S^{-1}`` of the weighted p = 2 Gram matrix, or ``None`` if ``S`` is linearly dependent."""
    gram = dictionary.gram[np.ix_(support, support)]
    eigenvalues, vectors = np.linalg.eigh(gram)

    if eigenvalues[0] <= rank_tol * max(eigenvalues[-1], np.finfo(float).tiny):
        return None

    return (vectors / eigenvalues) @ vectors.T


def _hilbert_l1_ratio(inverse: np.ndarray, local: Sequence[int], patterns: np.ndarray) -> float:
    block = inverse[np.ix_(local, local)]
    quadratic = np.einsum('ij,jk,ik->i', patterns, block, patterns)
    return float(np.sqrt(max(float(np.max(quadratic)), 0.0)))


def _dual_l1_ratio(dictionary: Dictionary, a: Sequence[int], b: Sequence[int], signs: np.ndarray) -> float:
    j = a[0]
    g = dictionary.matrix
    columns = [g[:, i] - signs[pos] * signs[0] * g[:, j] for pos, i in enumerate(a) if pos > 0]
    columns += [g[:, l] for l in b if l not in a]
    target = signs[0] * g[:, j]

    if not columns:
        distance = 1.0
    else:
        distance = chebyshev_projection(target, np.column_stack(columns), dictionary.space, PROJECTION).distance

    return np.inf if distance <= 1e-13 else 1.0 / distance


def _l1_ratio(
        dictionary: Dictionary,
        a:          tuple[int, ...],
        b:          tuple[int, ...],
        inverse:    np.ndarray,
        config:     AnalysisConfig,
        rng:        np.random.Generator
) -> tuple[float, str]:
    patterns, method = sign_patterns(len(a), config.sign_limit, rng)

    if dictionary.space.is_hilbert:
        local = [b.index(i) for i in a]
        return _hilbert_l1_ratio(inverse, local, patterns), method

    return max(_dual_l1_ratio(dictionary, a, b, signs) for signs in patterns), method


def nikolskii_C1(
        dictionary: Dictionary,
        K:          int,
        r:          float,
        cap:        Optional[int] = None,
        config:     AnalysisConfig = AnalysisConfig()
) -> Estimate:
    """
    ``C1 = max_{|A| <= K} |A|**(-r) max_x sum_A |x_i| / ||sum_A x_i g_i||``.

    Parameters:
        dictionary (Dictionary):
            The dictionary.

        K (int):
            Largest support size.

        r (float):
            Exponent in (0, 1].

        cap (Optional[int]):
            Enumeration cap; ``config.cap`` when omitted.

        config (AnalysisConfig):
            Limits and seed.

    Returns:
        Estimate:
            The constant, ``inf`` if some support is linearly dependent.
    """
    _check_parameters(dictionary, K, r=r)
    rng = config.rng()
    supports, method = supports_up_to(dictionary.size, K, config.cap if cap is None else cap, rng)
    methods = [method]
    best = 0.0

    for a in supports:
        inverse = inverse_gram(dictionary, a, config.rank_tol)

        if inverse is None:
            log.warning('Support %s is linearly dependent; C1 = inf', a)
            return Estimate(math.inf, combine(methods))

        ratio, sign_method = _l1_ratio(dictionary, a, a, inverse, config, rng)
        methods.append(sign_method)
        best = max(best, len(a) ** -r * ratio)

    return Estimate(best, combine(methods))


def ell1_incoherence_V(
        dictionary: Dictionary,
        K:          int,
        D:          int,
        r:          float,
        cap:        Optional[int] = None,
        config:     AnalysisConfig = AnalysisConfig(),
        support:    Optional[Sequence[int]] = None
) -> Estimate:
    """
    ``V = max_{A subset B, |A| <= K, |B| <= D} |A|**(-r) max_c sum_A |c_i| / ||sum_B c_i g_i||``.

    ``support`` restricts ``A`` to subsets of a given ``T``.

    Returns:
        Estimate:
            The constant, ``inf`` if some ``B`` is linearly dependent.
    """
    _check_parameters(dictionary, K, D, r)
    rng = config.rng()
    pairs, method = support_pairs(dictionary.size, K, D, config.cap if cap is None else cap, rng, within=support)
    methods = [method]
    best = 0.0

    for b, a_sets in pairs:
        inverse = inverse_gram(dictionary, b, config.rank_tol)

        if inverse is None:
            log.warning('Support %s is linearly dependent; V = inf', b)
            return Estimate(math.inf, combine(methods))

        for a in a_sets:
            ratio, sign_method = _l1_ratio(dictionary, a, b, inverse, config, rng)
            methods.append(sign_method)
            best = max(best, len(a) ** -r * ratio)

    return Estimate(best, combine(methods))


def unconditionality_U(
        dictionary: Dictionary,
        K:          int,
        D:          int,
        cap:        Optional[int] = None,
        config:     AnalysisConfig = AnalysisConfig()
) -> Estimate:
    """
    ``U = max_{A subset B, |A| <= K, |B| <= D} sup_c ||sum_A c_i g_i|| / ||sum_B c_i g_i||``.

    Exact at ``p = 2``. At other ``p`` a multi-start ascent over at most
    ``config.ascent_supports`` support pairs gives a lower bound tagged
    ``'sampled'``.
    """
    _check_parameters(dictionary, K, D)
    rng = config.rng()
    pairs, method = support_pairs(dictionary.size, K, D, config.cap if cap is None else cap, rng)

    for b, _ in pairs:
        if inverse_gram(dictionary, b, config.rank_tol) is None:
            log.warning('Support %s is linearly dependent; U = inf', b)
            return Estimate(math.inf, method)

    if dictionary.space.is_hilbert:
        best = 1.0

        for b, a_sets in pairs:
            inverse = inverse_gram(dictionary, b, config.rank_tol)

            for a in a_sets:
                local = [b.index(i) for i in a]
                factor = np.linalg.cholesky(inverse[np.ix_(local, local)])
                gram_a = dictionary.gram[np.ix_(a, a)]
                best = max(best, float(np.linalg.eigvalsh(factor.T @ gram_a @ factor)[-1]))

        return Estimate(math.sqrt(best), method)

    flat = [(a, b) for b, a_sets in pairs for a in a_sets]

    if len(flat) > config.ascent_supports:
        picks = sorted(rng.choice(len(flat), size=config.ascent_supports, replace=False))
        flat = [flat[i] for i in picks]

    best = 1.0

    for a, b in flat:
        bottom = dictionary.matrix[:, list(b)]
        top = bottom * np.isin(b, a)[None, :]
        ratio = maximize_norm_ratio(top, dictionary.space, bottom, dictionary.space,
                                    config.ascent_starts, config.ascent_iters, rng)
        best = max(best, ratio)

    log.info('unconditionality_U(K=%d, D=%d) at p=%g is a sampled lower bound', K, D, dictionary.space.p)

    return Estimate(best, SAMPLED)


def signal_incoherence_V(
        dictionary: Dictionary,
        rep:        SparseRepresentation,
        D:          int,
        r:          float,
        cap:        Optional[int] = None,
        config:     AnalysisConfig = AnalysisConfig()
) -> Estimate:
    """
    The l1-incoherence constant of one sparse element ``f = sum_T x_i g_i``.

    ``max |A|**(-r) sum_A |x_i| / dist(f_A, span{g_l : l in Lambda})`` over
    non-empty ``A subset T`` and ``Lambda`` disjoint from ``A`` with
    ``|A| + |Lambda| <= D``. The distance only shrinks as ``Lambda`` grows, so
    ``|Lambda| = min(D, N) - |A|``.
    """
    if not rep.size:
        raise DomainError('The representation has an empty support.')

    _check_parameters(dictionary, 1, D, r)
    T = rep.support
    count = dictionary.size
    size = min(D, count)
    others = {a: [i for i in range(count) if i not in a] for a in
              (subset for s in range(1, min(len(T), size) + 1) for subset in itertools.combinations(T, s))}
    total = sum(math.comb(len(rest), size - len(a)) for a, rest in others.items())
    cap = config.cap if cap is None else cap
    rng = config.rng()
    method = EXACT if total <= cap else SAMPLED

    if method == SAMPLED:
        log.warning('%d (A, Lambda) pairs exceed the cap %d; sampling', total, cap)

    best = 0.0

    for a, rest in others.items():
        f_a = synthesize(dictionary, rep.restricted(a))
        mass = rep.restricted(a).l1_norm
        length = size - len(a)

        if method == EXACT:
            lambdas = list(itertools.combinations(rest, length))
        else:
            share = max(1, round(cap * math.comb(len(rest), length) / total))
            lambdas = sorted({tuple(sorted(rng.choice(rest, size=length, replace=False).tolist())) for _ in range(share)})

        for lam in lambdas:
            if lam:
                distance = chebyshev_projection(f_a, dictionary.columns(lam), dictionary.space, PROJECTION).distance
            else:
                distance = f_a.norm()

            if distance <= 1e-13 * f_a.norm():
                log.warning('f_A lies in the span of %s; V = inf', lam)
                return Estimate(math.inf, method)

            best = max(best, len(a) ** -r * mass / distance)

    return Estimate(best, method)
