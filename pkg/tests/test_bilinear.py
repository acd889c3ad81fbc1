import numpy as np
import pytest

from chebygreedy.bilinear import Matrix2D, RankOneConfig, greedy_rank_one, load_matrix_csv, theta_m
from chebygreedy.dev_tools.instances import get_random_matrix
from chebygreedy.errors import DomainError, StructuralError


@pytest.mark.slow
def test_greedy_rank_one_attains_the_singular_value_tail():
    rng = np.random.default_rng(8)

    for instance in range(50):
        rows, cols = rng.integers(2, 17, size=2)
        f = get_random_matrix(int(rows), int(cols), seed=instance)
        approximation = greedy_rank_one(f, min(rows, cols), RankOneConfig(seed=instance))

        for M in range(1, min(rows, cols) + 1):
            assert approximation.residual_norm_at(M) == pytest.approx(theta_m(f, M), abs=1e-8), f'instance {instance}'


def test_weighted_rank_one_steps():
    rng = np.random.default_rng(1)
    f = Matrix2D(rng.standard_normal((6, 5)), row_weights=rng.uniform(0.5, 2.0, 6), col_weights=rng.uniform(0.5, 2.0, 5))
    approximation = greedy_rank_one(f, 5)

    for M in range(1, 6):
        assert approximation.residual_norm_at(M) == pytest.approx(theta_m(f, M), abs=1e-8)

    np.testing.assert_allclose(approximation.approximation(5), f.values, atol=1e-8)


def test_rank_one_matrix_needs_one_term():
    f = Matrix2D(np.outer([1.0, -2.0, 3.0], [0.5, 1.0]))
    approximation = greedy_rank_one(f, 2)

    assert len(approximation.terms) == 1
    assert approximation.residual_norm_at(1) == pytest.approx(0.0, abs=1e-12)
    assert approximation.residual_norm_at(2) == approximation.residual_norm_at(1)


def test_theta_without_terms_is_the_norm():
    f = get_random_matrix(4, 3)

    assert theta_m(f, 0) == pytest.approx(f.norm())
    assert theta_m(f, 3) == pytest.approx(0.0, abs=1e-12)


def test_rank_one_arguments():
    f = get_random_matrix(3, 3)

    with pytest.raises(DomainError):
        greedy_rank_one(f, 0)

    with pytest.raises(DomainError):
        theta_m(f, -1)

    with pytest.raises(DomainError):
        Matrix2D([[1.0, np.nan]])

    with pytest.raises(StructuralError):
        Matrix2D(np.ones(3))


def test_load_matrix_csv(tmp_path):
    path = tmp_path / 'matrix.csv'
    path.write_text('1,2,3\n4,5,6\n')

    f = load_matrix_csv(path)

    assert f.shape == (2, 3)
    np.testing.assert_array_equal(f.values, [[1, 2, 3], [4, 5, 6]])

    path.write_text('1,a\n2,3\n')

    with pytest.raises(StructuralError):
        load_matrix_csv(path)
