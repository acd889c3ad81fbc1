import numpy as np

from chebygreedy.bilinear import Matrix2D
from chebygreedy.harness.signals import planted_signal
from chebygreedy.models.dictionaries import build_custom, build_gaussian, build_haar, build_trigonometric
from chebygreedy.models.space import GridSpace


SEED = 0


def get_space(n=32, p=2.0):
    return GridSpace.uniform(n, p)


def get_gaussian_dictionary(n=32, count=64, p=2.0, seed=SEED):
    return build_gaussian(n, count, seed, get_space(n, p))


def get_trigonometric_dictionary(n=16, max_freq=3, p=2.0):
    return build_trigonometric(1, max_freq, get_space(n, p))


def get_haar_dictionary(levels=3, p=2.0):
    return build_haar(levels, 1, get_space(2 ** levels, p))


def get_twin_dictionary(n=8, extra=3, p=2.0, seed=SEED):
    """``g``, ``-g`` and ``extra`` random elements: coherence 1."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal(n)
    columns = np.column_stack([g, -g, rng.standard_normal((n, extra))])
    labels = ['g', '-g'] + [f'e{i}' for i in range(extra)]

    return build_custom(columns, get_space(n, p), labels=labels)


def get_planted_signal(dictionary, K=3, eps=0.0, seed=SEED, trial=0):
    """``(representation, f_0)`` of a K-sparse signal plus noise of norm ``eps``."""
    return planted_signal(dictionary, K, 'uniform_gap', eps, seed, trial)


def get_random_matrix(rows=8, cols=8, seed=SEED):
    return Matrix2D(np.random.default_rng(seed).standard_normal((rows, cols)))
