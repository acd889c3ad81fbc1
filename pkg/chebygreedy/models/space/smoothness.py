from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from chebygreedy.errors import DomainError
from chebygreedy.models.space.grid import GridSpace, lp_norms


@dataclass(frozen=True)
class SmoothnessConstants:
    """
    Power-type bound ``rho(u) <= gamma * u**q`` on the modulus of smoothness.

    Properties:
        q (float):
            Power, ``1 < q <= 2``.

        gamma (float):
            Positive multiplier.

        q_dual (float):
            Conjugate exponent ``q / (q - 1)``.
    """
    q:      float
    gamma:  float
    q_dual: float

    def __post_init__(self):
        if not 1.0 < self.q <= 2.0:
            raise DomainError(f'q must lie in (1, 2]; got {self.q}.')

        if not self.gamma > 0.0:
            raise DomainError(f'gamma must be positive; got {self.gamma}.')

        if abs(self.q_dual * (self.q - 1.0) - self.q) > 1e-12 * self.q:
            raise DomainError('q_dual must equal q / (q - 1).')

    @classmethod
    def from_power(cls, q: float, gamma: float) -> 'SmoothnessConstants':
        return cls(q=float(q), gamma=float(gamma), q_dual=float(q) / (float(q) - 1.0))

    def bound(self, u: float) -> float:
        """The majorant ``gamma * u**q``."""
        return self.gamma * u ** self.q


def smoothness_constants(p: float) -> SmoothnessConstants:
    """
    The classical power-type smoothness constants of L_p.

    ``p >= 2`` gives ``(q, gamma) = (2, (p - 1) / 2)``; ``1 < p <= 2`` gives
    ``(q, gamma) = (p, 1 / p)``. Both branches agree at ``p = 2``.

    Raises:
        DomainError:
            If ``p <= 1`` or ``p`` is not finite.
    """
    p = float(p)

    if not math.isfinite(p) or p <= 1.0:
        raise DomainError(f'p must lie in (1, inf); got {p}.')

    if p >= 2.0:
        return SmoothnessConstants.from_power(2.0, (p - 1.0) / 2.0)

    return SmoothnessConstants.from_power(p, 1.0 / p)


def estimate_modulus(
        space:   GridSpace,
        u:       float,
        samples: int = 10_000,
        seed:    Optional[int] = 0,
        batch:   int = 2048
) -> float:
    """
    Monte-Carlo lower estimate of the modulus of smoothness ``rho(u)``.

    Draws ``samples`` pairs of unit vectors ``x, y`` and returns the largest
    ``(||x + u y|| + ||x - u y||) / 2 - 1``. The result never exceeds the true
    supremum and is deterministic for a fixed ``seed``.

    Parameters:
        space (GridSpace):
            The ambient space.

        u (float):
            Non-negative step.

        samples (int):
            Number of sampled pairs.

        seed (Optional[int]):
            Seed for ``numpy.random.default_rng``.

        batch (int):
            Pairs evaluated per vectorized block.

    Returns:
        float:
            The estimate.
    """
    if u < 0:
        raise DomainError(f'u must be non-negative; got {u}.')

    if samples < 1:
        raise DomainError('At least one sample is required.')

    if u == 0:
        return 0.0

    rng = np.random.default_rng(seed)
    best = 0.0
    remaining = int(samples)

    while remaining > 0:
        size = min(batch, remaining)
        remaining -= size

        x = rng.standard_normal((size, space.dim))
        y = rng.standard_normal((size, space.dim))
        x /= lp_norms(x, space.weights, space.p, axis=1)[:, None]
        y /= lp_norms(y, space.weights, space.p, axis=1)[:, None]

        plus = lp_norms(x + u * y, space.weights, space.p, axis=1)
        minus = lp_norms(x - u * y, space.weights, space.p, axis=1)
        best = max(best, float(np.max(0.5 * (plus + minus) - 1.0)))

    return best
