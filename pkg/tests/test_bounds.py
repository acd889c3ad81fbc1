import math

import pytest

from chebygreedy.errors import DomainError
from chebygreedy.greedy import (
    convex_hull_rate_bound,
    convex_hull_rate_report,
    decay_constant,
    incoherence_iterations,
    recovery_iterations,
    residual_decay_bound,
)
from chebygreedy.models.space import smoothness_constants


HILBERT = smoothness_constants(2.0)


def test_decay_constant_in_hilbert_space():
    assert decay_constant(1.0, HILBERT, 1.0) == pytest.approx(1.0 / 16.0)
    assert decay_constant(0.5, HILBERT, 2.0) == pytest.approx(0.25 / 16.0 / 4.0)


def test_decay_constant_without_incoherence():
    assert decay_constant(1.0, HILBERT, math.inf) == 0.0


def test_decay_constant_rejects_small_v():
    with pytest.raises(DomainError):
        decay_constant(1.0, HILBERT, 0.5)


@pytest.mark.parametrize('t', [0.0, 1.2])
def test_decay_constant_rejects_bad_weakness(t):
    with pytest.raises(DomainError):
        decay_constant(t, HILBERT, 1.0)


def test_residual_decay_bound():
    assert residual_decay_bound(2.0, 3, 3, 2, 0.5, HILBERT, 1.0, 1.0, 0.1) == pytest.approx(2.2)
    assert residual_decay_bound(2.0, 0, 50, 2, 0.5, HILBERT, math.inf, 1.0, 0.0) == 2.0

    expected = math.exp(-(1.0 / 16.0) * 8 / 2.0)
    assert residual_decay_bound(1.0, 0, 8, 4, 0.5, HILBERT, 1.0, 1.0, 0.0) == pytest.approx(expected)


def test_residual_decay_bound_decreases_with_m():
    sc = smoothness_constants(3.0)
    bounds = [residual_decay_bound(1.0, 0, m, 3, 0.5, sc, 1.5, 1.0, 0.0) for m in range(10)]

    assert all(a > b for a, b in zip(bounds, bounds[1:]))


def test_residual_decay_bound_arguments():
    with pytest.raises(DomainError):
        residual_decay_bound(1.0, 4, 3, 1, 0.5, HILBERT, 1.0, 1.0, 0.0)

    with pytest.raises(DomainError):
        residual_decay_bound(1.0, 0, 3, 0, 0.5, HILBERT, 1.0, 1.0, 0.0)

    with pytest.raises(DomainError):
        residual_decay_bound(1.0, 0, 3, 1, 1.5, HILBERT, 1.0, 1.0, 0.0)


def test_convex_hull_rate_bound():
    assert convex_hull_rate_bound(3, 1.0, 0.0, HILBERT, 1.0) == pytest.approx(0.5)
    assert convex_hull_rate_bound(0, 1.0, 0.8, HILBERT, 1.0) == pytest.approx(1.8)
    assert convex_hull_rate_bound(99, 1.0, 0.5, HILBERT, 1.0) == pytest.approx(1.0)


def test_convex_hull_rate_report():
    report = convex_hull_rate_report(3, 1.0, 0.0, HILBERT, 1.0, C=4.0)

    assert report.shape_only == pytest.approx(0.5)
    assert report.configured == pytest.approx(2.0)
    assert report.constant == 4.0


def test_recovery_iterations():
    assert recovery_iterations(1.0, 1, 0.5, HILBERT, 1.0, 1.0) == 1
    assert recovery_iterations(2.0, 4, 0.5, HILBERT, 1.0, 1.0) == math.ceil(0.5 * 4.0 * math.log(3.0) * 4.0)

    with pytest.raises(DomainError):
        recovery_iterations(math.inf, 1, 0.5, HILBERT, 1.0, 1.0)


def test_incoherence_iterations():
    assert incoherence_iterations(1.0, 1, 0.5, HILBERT, 1.0) == 1
    assert incoherence_iterations(2.0, 2, 1.0, HILBERT, 1.0) == math.ceil(0.5 * 4.0 * math.log(4.0) * 4.0)

    with pytest.raises(DomainError):
        incoherence_iterations(math.inf, 2, 0.5, HILBERT, 1.0)
