"""
Multi-start ascent on ``||top @ c|| / ||bottom @ c||``.

Used where no closed form or convex reformulation is available (the
unconditionality and domination constants at ``p != 2``). Every value it
returns is attained by some coefficient vector, so it is a lower bound of the
supremum.
"""
from __future__ import annotations

from typing import Optional

import numpy as np
import scipy.linalg

from chebygreedy.models.space import GridSpace, lp_norms, norming_vector


def _log_ratio(top: np.ndarray, top_space: GridSpace, bottom: np.ndarray, bottom_space: GridSpace, c: np.ndarray) -> float:
    upper = float(lp_norms(top @ c, top_space.weights, top_space.p))
    lower = float(lp_norms(bottom @ c, bottom_space.weights, bottom_space.p))

    if lower == 0.0:
        return np.inf

    if upper == 0.0:
        return -np.inf

    return float(np.log(upper) - np.log(lower))


def _gradient(top: np.ndarray, top_space: GridSpace, bottom: np.ndarray, bottom_space: GridSpace, c: np.ndarray) -> np.ndarray:
    x_top = top @ c
    x_bottom = bottom @ c
    upper = float(lp_norms(x_top, top_space.weights, top_space.p))
    lower = float(lp_norms(x_bottom, bottom_space.weights, bottom_space.p))

    return top.T @ norming_vector(top_space, x_top) / upper - bottom.T @ norming_vector(bottom_space, x_bottom) / lower


def hilbert_start(top: np.ndarray, top_space: GridSpace, bottom: np.ndarray, bottom_space: GridSpace) -> Optional[np.ndarray]:
    """The maximizer of the same ratio in the weighted p = 2 norms; ``None`` if it is ill-posed."""
    a = np.sqrt(top_space.weights)[:, None] * top
    b = np.sqrt(bottom_space.weights)[:, None] * bottom

    try:
        _, vectors = scipy.linalg.eigh(a.T @ a, b.T @ b)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError):
        return None

    return vectors[:, -1] / np.linalg.norm(vectors[:, -1])


def maximize_norm_ratio(
        top:          np.ndarray,
        top_space:    GridSpace,
        bottom:       np.ndarray,
        bottom_space: GridSpace,
        starts:       int,
        iterations:   int,
        rng:          np.random.Generator
) -> float:
    """
    Largest ratio found by gradient ascent on the log-ratio from ``starts``
    starting points (the p = 2 maximizer, then Gaussian draws).

    The ratio is scale invariant, so iterates are kept on the unit sphere.
    Steps grow after a success and are halved until the ratio increases.

    Returns:
        float:
            ``inf`` if a coefficient vector with ``bottom @ c == 0`` and
            ``top @ c != 0`` is met.
    """
    k = top.shape[1]
    first = hilbert_start(top, top_space, bottom, bottom_space)
    best = -np.inf

    for start in range(starts):
        c = first if (start == 0 and first is not None) else rng.standard_normal(k)
        c = c / np.linalg.norm(c)
        value = _log_ratio(top, top_space, bottom, bottom_space, c)

        if value == np.inf:
            return np.inf

        step = 1.0

        for _ in range(iterations):
            if value == -np.inf:
                break

            direction = _gradient(top, top_space, bottom, bottom_space, c)
            direction -= (direction @ c) * c

            if np.linalg.norm(direction) < 1e-13:
                break

            improved = False

            while step > 1e-12:
                trial = c + step * direction
                trial /= np.linalg.norm(trial)
                trial_value = _log_ratio(top, top_space, bottom, bottom_space, trial)

                if trial_value > value:
                    c, value, improved = trial, trial_value, True
                    step *= 2.0
                    break

                step *= 0.5

            if not improved or value == np.inf:
                break

        if value == np.inf:
            return np.inf

        best = max(best, value)

    return float(np.exp(best))
