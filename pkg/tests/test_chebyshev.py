import numpy as np
import pytest

from chebygreedy.errors import NonConvergenceError
from chebygreedy.greedy import ChebyshevConfig, IncrementalQR, chebyshev_project, chebyshev_projection
from chebygreedy.models.space import GridSpace, norm, norming_vector


@pytest.fixture
def problem():
    rng = np.random.default_rng(3)
    return rng.standard_normal(24), rng.standard_normal((24, 4))


def test_p2_is_least_squares(problem):
    target, span = problem
    space = GridSpace.uniform(24, 2.0)

    coefficients, residual = chebyshev_project(target, span, space)

    np.testing.assert_allclose(coefficients, np.linalg.lstsq(span, target, rcond=None)[0], rtol=1e-10, atol=1e-12)
    np.testing.assert_allclose(residual.values, target - span @ coefficients, atol=1e-12)


@pytest.mark.parametrize('p', [3.0, 4.0, 6.0])
def test_newton_reaches_the_certificate(problem, p):
    target, span = problem
    space = GridSpace.uniform(24, p)

    projection = chebyshev_projection(target, span, space)

    assert projection.kkt <= 1e-10
    assert projection.iterations > 0
    assert projection.rank == 4

    # first-order optimality: the residual's norming functional annihilates the span
    scale = np.linalg.norm(span, axis=0)
    assert np.max(np.abs(norming_vector(space, projection.residual) @ span) / scale) <= 1e-8

    least_squares = np.linalg.lstsq(span, target, rcond=None)[0]
    assert projection.distance <= norm(space, target - span @ least_squares) + 1e-12


def test_dependent_columns_get_zero_weight(problem):
    target, span = problem
    space = GridSpace.uniform(24, 3.0)
    u, v = span[:, 0], span[:, 1]

    projection = chebyshev_projection(target, np.column_stack([u, 2.0 * u, v]), space)
    reference = chebyshev_projection(target, np.column_stack([u, v]), space)

    assert projection.rank == 2
    assert np.count_nonzero(projection.coefficients) == 2
    assert projection.distance == pytest.approx(reference.distance, rel=1e-9)


def test_empty_span_returns_the_target():
    space = GridSpace.uniform(8, 4.0)
    target = np.arange(8.0)

    projection = chebyshev_projection(target, [], space)

    assert projection.coefficients.size == 0
    np.testing.assert_array_equal(projection.residual.values, target)
    assert projection.kkt == 0.0


def test_exhausted_newton_budget_raises(problem):
    target, span = problem
    space = GridSpace.uniform(24, 4.0)

    with pytest.raises(NonConvergenceError) as caught:
        chebyshev_projection(target, span, space, ChebyshevConfig(max_iter=0))

    assert caught.value.last_iterate.shape == (4,)
    assert caught.value.gradient_norm > 1e-10


def test_incremental_qr_matches_least_squares(problem):
    target, span = problem
    qr = IncrementalQR(target)

    for j in range(span.shape[1]):
        assert qr.append(span[:, j])

    np.testing.assert_allclose(qr.coefficients(), np.linalg.lstsq(span, target, rcond=None)[0], rtol=1e-10, atol=1e-12)
    np.testing.assert_allclose(qr.q.T @ qr.q, np.eye(4), atol=1e-13)
    np.testing.assert_allclose(qr.q.T @ qr.residual, 0.0, atol=1e-12)


def test_incremental_qr_rejects_dependent_columns(problem):
    target, span = problem
    qr = IncrementalQR(target)
    qr.append(span[:, 0])
    qr.append(span[:, 1])

    combination = span[:, 0] - 3.0 * span[:, 1]

    assert qr.is_dependent(combination)
    assert not qr.append(combination)
    assert not qr.append(np.zeros(24))
    assert qr.rank == 2
