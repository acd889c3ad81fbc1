import numpy as np
import pytest

from chebygreedy.errors import ConfigurationError, DomainError, StructuralError
from chebygreedy.models.dictionaries import (
    SparseRepresentation,
    build_custom,
    build_from_descriptor,
    build_gaussian,
    build_haar,
    build_trigonometric,
    load_descriptor,
    load_dictionary_csv,
    save_descriptor,
    save_dictionary_csv,
    synthesize,
)
from chebygreedy.models.space import GridSpace, lp_norms


def test_trigonometric_is_orthonormal_at_p2(trig):
    assert trig.size == 7
    np.testing.assert_allclose(trig.gram, np.eye(7), atol=1e-12)
    assert trig.labels[:3] == ('1', 'cos1', 'sin1')


def test_trigonometric_tensor_size():
    space = GridSpace.uniform((8, 8), 2.0)
    dictionary = build_trigonometric(2, 2, space)

    assert dictionary.size == 25
    np.testing.assert_allclose(dictionary.gram, np.eye(25), atol=1e-12)


def test_trigonometric_rejects_coarse_grids():
    with pytest.raises(ConfigurationError):
        build_trigonometric(1, 4, GridSpace.uniform(8, 2.0))


def test_elements_have_unit_norm_at_every_p(any_p):
    space = GridSpace.uniform(16, any_p)

    for dictionary in (build_trigonometric(1, 3, space), build_haar(4, 1, space), build_gaussian(16, 10, 0, space)):
        np.testing.assert_allclose(lp_norms(dictionary.matrix, space.weights, any_p, axis=0), 1.0, atol=1e-12)


def test_haar_is_orthonormal_at_p2(haar):
    assert haar.size == 8
    np.testing.assert_allclose(haar.gram, np.eye(8), atol=1e-12)
    assert haar.labels[0] == '[0,1]'
    assert haar.labels[1] == '[0,1)'


def test_haar_needs_a_dyadic_grid():
    with pytest.raises(ConfigurationError):
        build_haar(3, 1, GridSpace.uniform(12, 2.0))

    with pytest.raises(ConfigurationError):
        build_haar(2, 1, GridSpace.uniform(16, 2.0))


def test_gaussian_is_reproducible():
    space = GridSpace.uniform(8, 3.0)

    a = build_gaussian(8, 5, 42, space)
    b = build_gaussian(8, 5, 42, space)

    assert np.array_equal(a.matrix, b.matrix)
    assert a.descriptor == {'kind': 'gaussian', 'params': {'n': 8, 'count': 5}, 'seed': 42}


def test_custom_rejects_zero_columns(space):
    matrix = np.ones((32, 2))
    matrix[:, 1] = 0.0

    with pytest.raises(DomainError):
        build_custom(matrix, space)


def test_dictionary_is_read_only(gaussian):
    with pytest.raises(ValueError):
        gaussian.matrix[0, 0] = 1.0

    with pytest.raises(AttributeError):
        gaussian.labels = ['x'] * gaussian.size


def test_synthesize(trig):
    rep = SparseRepresentation({0: 2.0, 3: -1.0})
    f = synthesize(trig, rep)

    np.testing.assert_allclose(f.values, 2.0 * trig.matrix[:, 0] - trig.matrix[:, 3])
    assert synthesize(trig, SparseRepresentation()).is_zero()

    with pytest.raises(StructuralError):
        synthesize(trig, SparseRepresentation({99: 1.0}))


def test_sparse_representation():
    rep = SparseRepresentation({4: 1.0, 1: -2.0, 7: 0.0})

    assert rep.support == (1, 4)
    assert rep.l1_norm == 3.0
    assert rep.restricted([4]).coefficients == {4: 1.0}
    assert rep.scaled(2.0).coefficients == {1: -4.0, 4: 2.0}
    assert rep.merge(SparseRepresentation({2: 5.0})).support == (1, 2, 4)

    with pytest.raises(StructuralError):
        rep.merge(SparseRepresentation({1: 1.0}))

    with pytest.raises(StructuralError):
        SparseRepresentation.from_arrays([1, 1], [1.0, 2.0])


def test_descriptor_rebuilds_the_dictionary(tmp_path):
    space = GridSpace.uniform(16, 2.0)
    original = build_gaussian(16, 6, 9, space)

    descriptor = load_descriptor(save_descriptor(original, tmp_path / 'dictionary.json'))
    rebuilt = build_from_descriptor(descriptor, space)

    assert np.array_equal(rebuilt.matrix, original.matrix)


def test_unknown_descriptor_kind(space):
    with pytest.raises(ConfigurationError):
        build_from_descriptor({'kind': 'wavelet', 'params': {}}, space)


def test_csv_round_trip(tmp_path, trig):
    path = save_dictionary_csv(trig, tmp_path / 'trig.csv')
    loaded = load_dictionary_csv(path, trig.space)

    assert loaded.labels == trig.labels
    np.testing.assert_allclose(loaded.matrix, trig.matrix, atol=1e-12)
