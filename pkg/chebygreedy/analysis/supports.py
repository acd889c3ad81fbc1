"""
Support enumeration shared by the constant computers.

Exact enumeration is used while the number of supports stays within the cap;
beyond it, supports are drawn uniformly at random from a seeded generator and
the result is tagged ``'sampled'``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)

EXACT = 'exact'
SAMPLED = 'sampled'


class Estimate(NamedTuple):
    """A computed constant and how it was obtained ('exact' or 'sampled')."""
    value:  float
    method: str


def combine(methods: Sequence[str]) -> str:
    return SAMPLED if SAMPLED in methods else EXACT


@dataclass(frozen=True)
class AnalysisConfig:
    """
    Enumeration limits and ascent settings of the constant computers.

    Properties:
        cap (int):
            Largest number of supports (or support pairs) enumerated exactly.

        sign_limit (int):
            Largest ``|A|`` whose sign patterns are enumerated exactly.

        ascent_starts (int):
            Starts of the multi-start ascent used at ``p != 2``.

        ascent_iters (int):
            Iterations per start.

        ascent_supports (int):
            Supports the ascent visits (sampled when there are more).

        rank_tol (float):
            Relative eigenvalue floor below which a support Gram matrix counts
            as singular.

        seed (int):
            Seed of every sampled quantity.
    """
    cap:             int = 200_000
    sign_limit:      int = 10
    ascent_starts:   int = 20
    ascent_iters:    int = 500
    ascent_supports: int = 64
    rank_tol:        float = 1e-12
    seed:            int = 0

    def __post_init__(self):
        if self.cap < 1 or self.ascent_supports < 1:
            raise DomainError('Enumeration caps must be positive.')

        if self.sign_limit < 1:
            raise DomainError('sign_limit must be positive.')

        if self.ascent_starts < 1 or self.ascent_iters < 0:
            raise DomainError('The ascent needs at least one start and a non-negative iteration count.')

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def _random_subset(rng: np.random.Generator, pool: Sequence[int], size: int) -> tuple[int, ...]:
    return tuple(sorted(int(i) for i in rng.choice(pool, size=size, replace=False)))


def supports_of_size(
        count: int,
        size:  int,
        cap:   int,
        rng:   np.random.Generator
) -> tuple[list[tuple[int, ...]], str]:
    """
    All ``size``-subsets of ``range(count)`` in lexicographic order, or ``cap``
    random ones (deduplicated, sorted) when there are more than ``cap``.
    """
    if not 0 <= size <= count:
        raise StructuralError(f'Support size {size} is out of range for {count} elements.')

    total = math.comb(count, size)

    if total <= cap:
        return list(itertools.combinations(range(count), size)), EXACT

    log.warning('%d supports of size %d exceed the cap %d; sampling', total, size, cap)
    drawn = {_random_subset(rng, np.arange(count), size) for _ in range(cap)}

    return sorted(drawn), SAMPLED


def supports_up_to(
        count:   int,
        largest: int,
        cap:     int,
        rng:     np.random.Generator
) -> tuple[list[tuple[int, ...]], str]:
    """Supports of every size ``1..largest``; sampled per size when the total exceeds ``cap``."""
    largest = min(largest, count)
    total = sum(math.comb(count, s) for s in range(1, largest + 1))

    if total <= cap:
        return [a for s in range(1, largest + 1) for a in itertools.combinations(range(count), s)], EXACT

    out = []
    methods = []

    for s in range(1, largest + 1):
        share = max(1, round(cap * math.comb(count, s) / total))
        chosen, method = supports_of_size(count, s, share, rng)
        out.extend(chosen)
        methods.append(method)

    return out, combine(methods)


def _subsets(pool: Sequence[int], largest: int) -> list[tuple[int, ...]]:
    return [a for s in range(1, min(largest, len(pool)) + 1) for a in itertools.combinations(pool, s)]


def support_pairs(
        count:  int,
        K:      int,
        D:      int,
        cap:    int,
        rng:    np.random.Generator,
        within: Optional[Sequence[int]] = None
) -> tuple[list[tuple[tuple[int, ...], list[tuple[int, ...]]]], str]:
    """
    Pairs ``A subset B`` with ``|A| <= K`` and ``|B| = min(D, count)``, grouped by ``B``.

    Every ratio maximized over such pairs can only grow when ``B`` grows, so
    the largest admissible ``B`` suffices. ``within`` restricts ``A`` to a
    subset ``T`` of the indices.

    Returns:
        tuple:
            ``[(B, [A, ...]), ...]`` in lexicographic order of ``B`` and the
            method tag.
    """
    if K < 1 or D < K:
        raise DomainError(f'Need 1 <= K <= D; got K={K}, D={D}.')

    size = min(D, count)
    allowed = None if within is None else sorted(set(int(i) for i in within))
    allowed_set = set(allowed or ())

    if allowed is not None and (not allowed or allowed[0] < 0 or allowed[-1] >= count):
        raise StructuralError('The restricting support must be a non-empty set of valid indices.')

    def a_sets(b: tuple[int, ...]) -> list[tuple[int, ...]]:
        pool = b if allowed is None else [i for i in b if i in allowed_set]
        return _subsets(pool, K)

    if allowed is None:
        total = math.comb(count, size) * sum(math.comb(size, s) for s in range(1, min(K, size) + 1))
    else:
        t = len(allowed)
        total = sum(
            math.comb(t, j) * math.comb(count - t, size - j) * sum(math.comb(j, s) for s in range(1, min(K, j) + 1))
            for j in range(1, min(t, size) + 1)
        )

    if total <= cap:
        pairs = [(b, a_sets(b)) for b in itertools.combinations(range(count), size)]
        return [(b, sets) for b, sets in pairs if sets], EXACT

    log.warning('%d support pairs exceed the cap %d; sampling', total, cap)
    per_b = sum(math.comb(size, s) for s in range(1, min(K, size) + 1))
    draws = max(1, cap // per_b)
    chosen = set()

    for _ in range(draws):
        if allowed is None:
            chosen.add(_random_subset(rng, np.arange(count), size))
        else:
            anchor = int(rng.choice(allowed))
            rest = [i for i in range(count) if i != anchor]
            chosen.add(tuple(sorted((anchor,) + _random_subset(rng, rest, size - 1))))

    pairs = []

    for b in sorted(chosen):
        sets = a_sets(b)

        if len(sets) > cap:
            picks = rng.choice(len(sets), size=cap, replace=False)
            sets = [sets[i] for i in sorted(picks)]

        pairs.append((b, sets))

    return pairs, SAMPLED


def sign_patterns(size: int, limit: int, rng: np.random.Generator) -> tuple[np.ndarray, str]:
    """
    Sign vectors in ``{-1, 1}**size`` with first entry ``+1`` (``-eps`` gives
    the same ratio), all of them when ``size <= limit`` and ``2**(limit-1)``
    random ones otherwise.
    """
    if size <= limit:
        rows = list(itertools.product((1.0, -1.0), repeat=size - 1))
        return np.column_stack([np.ones(len(rows)), np.array(rows).reshape(len(rows), size - 1)]), EXACT

    draws = rng.choice((1.0, -1.0), size=(2 ** (limit - 1), size))
    draws[:, 0] = 1.0

    return np.unique(draws, axis=0), SAMPLED
