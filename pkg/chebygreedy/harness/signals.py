"""
Seeded random streams and signal models of the experiments.

Every draw of trial ``i`` comes from its own generator,
``SeedSequence(seed, spawn_key=(i, stream))``, one per named stream, so a
trial's dictionary, support, coefficients and noise do not depend on how many
numbers another stream consumed or on the order trials run in.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from chebygreedy.errors import ConfigurationError, DomainError, StructuralError
from chebygreedy.models.dictionaries import Dictionary, SparseRepresentation, synthesize
from chebygreedy.models.space import FunctionVector, GridSpace


STREAMS = {
    'dictionary':   0,
    'support':      1,
    'coefficients': 2,
    'noise':        3,
    'signal':       4,
    'solver':       5,
}

# planted coefficients are drawn from [-1, -GAP] U [GAP, 1]
GAP = 0.1


def stream(seed: int, trial: Optional[int], name: str) -> np.random.Generator:
    """
    The generator of one named stream.

    Parameters:
        seed (int):
            The experiment seed.

        trial (Optional[int]):
            Trial index; ``None`` for draws shared by all trials.

        name (str):
            A key of ``STREAMS``.
    """
    if name not in STREAMS:
        raise ConfigurationError(f"Unknown random stream '{name}'; expected one of {tuple(STREAMS)}.")

    key = (STREAMS[name],) if trial is None else (int(trial), STREAMS[name])

    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def derived_seed(seed: int, trial: Optional[int], name: str) -> int:
    """A 63-bit integer seed for builders and solvers that take an int."""
    return int(stream(seed, trial, name).integers(2 ** 63 - 1))


def planted_representation(
        dictionary:   Dictionary,
        K:            int,
        law:          str,
        support_rng:  np.random.Generator,
        coef_rng:     np.random.Generator
) -> SparseRepresentation:
    """
    A K-sparse representation on a uniformly random support.

    ``law='uniform_gap'`` draws magnitudes uniformly from ``[GAP, 1]`` with
    random signs; ``law='gaussian'`` draws standard normal coefficients.
    """
    if not 1 <= K <= dictionary.size:
        raise StructuralError(f'K={K} must lie in [1, {dictionary.size}].')

    support = np.sort(support_rng.choice(np.arange(dictionary.size), size=K, replace=False))

    if law == 'uniform_gap':
        values = coef_rng.uniform(GAP, 1.0, size=K) * coef_rng.choice(np.array([-1.0, 1.0]), size=K)
    elif law == 'gaussian':
        values = coef_rng.standard_normal(K)
    else:
        raise ConfigurationError(f"Unknown coefficient law '{law}'.")

    return SparseRepresentation.from_arrays(support.tolist(), values.tolist())


def add_noise(f: FunctionVector, eps: float, rng: np.random.Generator) -> FunctionVector:
    """``f + e`` with a Gaussian direction ``e`` rescaled to ``||e|| = eps`` exactly."""
    if eps < 0:
        raise DomainError('eps must be non-negative.')

    if eps == 0:
        return f

    direction = FunctionVector(rng.standard_normal(f.space.dim), f.space)

    return f + direction * (eps / direction.norm())


def dense_signal(space: GridSpace, rng: np.random.Generator) -> FunctionVector:
    """I.i.d. standard normal samples, a signal with no sparse structure."""
    return FunctionVector(rng.standard_normal(space.dim), space)


def decay_representation(dictionary: Dictionary, r: float, rng: np.random.Generator) -> SparseRepresentation:
    """
    Coefficients ``+-(1 + i)**(-(r + 1/2))`` with random signs on every element,
    in dictionary order.

    On the trigonometric dictionary (ordered by frequency) this mimics a
    function of smoothness ``r``: the best m-term error decays like ``m**(-r)``.
    """
    if r <= 0:
        raise DomainError('The decay exponent r must be positive.')

    indices = np.arange(dictionary.size)
    values = (1.0 + indices) ** (-(r + 0.5)) * rng.choice(np.array([-1.0, 1.0]), size=dictionary.size)

    return SparseRepresentation.from_arrays(indices.tolist(), values.tolist())


def planted_signal(
        dictionary: Dictionary,
        K:          int,
        law:        str,
        eps:        float,
        seed:       int,
        trial:      int
) -> tuple[SparseRepresentation, FunctionVector]:
    """The representation of a planted signal and ``f_0`` = its synthesis plus noise of norm ``eps``."""
    rep = planted_representation(
        dictionary, K, law, stream(seed, trial, 'support'), stream(seed, trial, 'coefficients')
    )
    f0 = add_noise(synthesize(dictionary, rep), eps, stream(seed, trial, 'noise'))

    return rep, f0
