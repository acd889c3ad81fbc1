"""
Closed-form evaluators of the WCGA error bounds and iteration counts.

All evaluators take the smoothness constants ``(q, gamma)`` of the ambient
space (see :func:`chebygreedy.models.space.smoothness_constants`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from chebygreedy.errors import DomainError
from chebygreedy.models.space import SmoothnessConstants


def _check_weakness(t: float):
    if not 0.0 < t <= 1.0:
        raise DomainError(f'The weakness parameter t must lie in (0, 1]; got {t}.')


def _check_exponent(r: float):
    if not 0.0 < r <= 1.0:
        raise DomainError(f'The exponent r must lie in (0, 1]; got {r}.')


def decay_constant(t: float, sc: SmoothnessConstants, V: float) -> float:
    """
    ``c_1 = t**q' / (2 (16 gamma)**(1/(q-1)) V**q')``.

    ``V = inf`` (the incoherence property fails) gives ``c_1 = 0``.
    """
    _check_weakness(t)

    if math.isinf(V):
        return 0.0

    if V < 1.0:
        raise DomainError(f'V must be at least 1; got {V}.')

    return t ** sc.q_dual / (2.0 * (16.0 * sc.gamma) ** (1.0 / (sc.q - 1.0)) * V ** sc.q_dual)


def residual_decay_bound(
        norm_fk: float,
        k:       int,
        m:       int,
        K:       int,
        r:       float,
        sc:      SmoothnessConstants,
        V:       float,
        t:       float,
        eps:     float
) -> float:
    """
    The geometric decay bound ``||f_m|| <= ||f_k|| exp(-c_1 (m - k) / K**(r q')) + 2 eps``.

    Parameters:
        norm_fk (float):
            The residual norm after ``k`` iterations.

        k (int):
            Starting iteration.

        m (int):
            Target iteration, ``m >= k``.

        K (int):
            Sparsity of the signal.

        r (float):
            Exponent of the incoherence property, ``0 < r <= 1``.

        sc (SmoothnessConstants):
            Smoothness constants of the space.

        V (float):
            The l1-incoherence constant.

        t (float):
            Weakness parameter.

        eps (float):
            Distance of ``f_0`` from the sparse signal.

    Returns:
        float:
            The right-hand side, evaluated as written.
    """
    if m < k:
        raise DomainError(f'm={m} must not be smaller than k={k}.')

    if K < 1:
        raise DomainError('K must be at least 1.')

    if norm_fk < 0 or eps < 0:
        raise DomainError('Norms and eps must be non-negative.')

    _check_exponent(r)
    c1 = decay_constant(t, sc, V)

    return norm_fk * math.exp(-c1 * (m - k) / K ** (r * sc.q_dual)) + 2.0 * eps


def convex_hull_rate_bound(
        m:     int,
        A_eps: float,
        eps:   float,
        sc:    SmoothnessConstants,
        t:     float,
        C:     float = 1.0
) -> float:
    """
    ``max(2 eps, C (A(eps) + eps) t (1 + m)**(1/q - 1))``.

    ``C = C(q, gamma)`` has no known value; ``C = 1`` gives the shape of the
    bound only.
    """
    if m < 0:
        raise DomainError('m must be non-negative.')

    if A_eps < 0 or eps < 0:
        raise DomainError('A(eps) and eps must be non-negative.')

    _check_weakness(t)

    return max(2.0 * eps, C * (A_eps + eps) * t * (1.0 + m) ** (1.0 / sc.q - 1.0))


@dataclass(frozen=True)
class RateBound:
    """The convex-hull rate bound with ``C = 1`` and with a configured ``C``."""
    m:          int
    shape_only: float
    configured: float
    constant:   float


def convex_hull_rate_report(
        m:     int,
        A_eps: float,
        eps:   float,
        sc:    SmoothnessConstants,
        t:     float,
        C:     float = 1.0
) -> RateBound:
    return RateBound(
        m=m,
        shape_only=convex_hull_rate_bound(m, A_eps, eps, sc, t, 1.0),
        configured=convex_hull_rate_bound(m, A_eps, eps, sc, t, C),
        constant=C,
    )


def recovery_iterations(
        U:  float,
        K:  int,
        r:  float,
        sc: SmoothnessConstants,
        t:  float,
        C1: float,
        C2: float = 1.0
) -> int:
    """
    Iteration count ``C' U**q' ln(U + 1) K**(r q')`` after which a K-sparse
    signal satisfying the Nikol'skii and unconditionality properties is
    recovered exactly, with ``C' = C2 gamma**(1/(q-1)) C1**q' t**(-q')``.

    ``C2`` is an unspecified absolute constant depending on ``q``; the default
    of 1 evaluates the shape only. The result is rounded up and is at least 1.
    """
    _check_weakness(t)
    _check_exponent(r)

    if math.isinf(U) or math.isinf(C1):
        raise DomainError('U and C1 must be finite to yield an iteration count.')

    c_prime = C2 * sc.gamma ** (1.0 / (sc.q - 1.0)) * C1 ** sc.q_dual * t ** (-sc.q_dual)
    value = c_prime * U ** sc.q_dual * math.log(U + 1.0) * K ** (r * sc.q_dual)

    return max(1, math.ceil(value))


def incoherence_iterations(
        V:  float,
        K:  int,
        r:  float,
        sc: SmoothnessConstants,
        t:  float,
        C2: float = 1.0
) -> int:
    """
    Iteration count ``C(t, gamma, q) V**q' ln(V K) K**(r q')`` under the
    l1-incoherence property alone, with ``C(t, gamma, q) = C2 gamma**(1/(q-1)) t**(-q')``.

    Rounded up, at least 1.
    """
    _check_weakness(t)
    _check_exponent(r)

    if math.isinf(V):
        raise DomainError('V must be finite to yield an iteration count.')

    constant = C2 * sc.gamma ** (1.0 / (sc.q - 1.0)) * t ** (-sc.q_dual)
    value = constant * V ** sc.q_dual * math.log(V * K) * K ** (r * sc.q_dual)

    return max(1, math.ceil(value))
