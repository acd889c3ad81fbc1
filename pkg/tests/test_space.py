import math

import numpy as np
import pytest

from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.models.space import (
    FunctionVector,
    GridSpace,
    estimate_modulus,
    lp_norms,
    norm,
    norming_functional,
    smoothness_constants,
)


def test_norm_matches_definition(any_p):
    space = GridSpace(4, any_p, weights=[0.1, 0.2, 0.3, 0.4])
    values = np.array([1.0, -2.0, 0.5, 3.0])

    expected = np.sum(space.weights * np.abs(values) ** any_p) ** (1.0 / any_p)

    assert norm(space, values) == pytest.approx(expected, rel=1e-14)


def test_norm_survives_huge_entries():
    space = GridSpace.uniform(4, 50.0)

    assert np.isfinite(lp_norms(np.array([1e300, 1.0, 0.0, -1e300]), space.weights, space.p))


def test_norming_functional_peaks_at_g(any_p):
    space = GridSpace.uniform(16, any_p)
    rng = np.random.default_rng(3)
    g = space.vector(rng.standard_normal(16))

    assert norming_functional(space, g, g) == pytest.approx(g.norm(), rel=1e-12)

    for _ in range(20):
        h = space.vector(rng.standard_normal(16))
        assert abs(norming_functional(space, g, h)) <= h.norm() * (1 + 1e-12)


def test_norming_functional_of_zero_is_undefined(space):
    with pytest.raises(DomainError):
        norming_functional(space, space.zeros(), space.zeros())


@pytest.mark.parametrize('p', [1.0, 0.5, math.inf, float('nan')])
def test_space_rejects_non_smooth_exponents(p):
    with pytest.raises(DomainError):
        GridSpace.uniform(8, p)


def test_space_attributes_are_set_once(space):
    with pytest.raises(AttributeError):
        space.p = 3.0


def test_vectors_must_share_a_space():
    a = GridSpace.uniform(4, 2.0).vector(np.ones(4))
    b = GridSpace.uniform(4, 3.0).vector(np.ones(4))

    with pytest.raises(StructuralError):
        a + b

    with pytest.raises(StructuralError):
        FunctionVector(np.ones(3), GridSpace.uniform(4, 2.0))


def test_vector_arithmetic(space):
    f = space.vector(np.arange(32.0))

    np.testing.assert_allclose((2 * f - f).values, f.values)
    assert (-f).norm() == pytest.approx(f.norm())
    assert space.zeros().is_zero()


@pytest.mark.parametrize('p, q, gamma', [(1.5, 1.5, 1 / 1.5), (2.0, 2.0, 0.5), (3.0, 2.0, 1.0), (4.0, 2.0, 1.5)])
def test_smoothness_constants(p, q, gamma):
    sc = smoothness_constants(p)

    assert sc.q == pytest.approx(q)
    assert sc.gamma == pytest.approx(gamma)
    assert sc.q_dual == pytest.approx(q / (q - 1))


def test_smoothness_constants_reject_p_one():
    with pytest.raises(DomainError):
        smoothness_constants(1.0)


@pytest.mark.slow
@pytest.mark.parametrize('u', [0.01, 0.1, 0.5, 1.0])
def test_sampled_modulus_stays_below_the_power_bound(any_p, u):
    space = GridSpace.uniform(16, any_p)
    sc = smoothness_constants(any_p)

    assert estimate_modulus(space, u, samples=10_000, seed=0) <= sc.bound(u) + 1e-9


def test_modulus_estimate_is_reproducible(space):
    assert estimate_modulus(space, 0.3, samples=500, seed=4) == estimate_modulus(space, 0.3, samples=500, seed=4)
    assert estimate_modulus(space, 0.0) == 0.0
