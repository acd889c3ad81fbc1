import pytest

from chebygreedy.dev_tools.instances import (
    get_gaussian_dictionary,
    get_haar_dictionary,
    get_space,
    get_trigonometric_dictionary,
    get_twin_dictionary,
)


@pytest.fixture
def space():
    return get_space(32, 2.0)


@pytest.fixture(params=[1.5, 2.0, 3.0, 4.0], ids=lambda p: f'p={p:g}')
def any_p(request):
    return request.param


@pytest.fixture
def gaussian():
    return get_gaussian_dictionary(32, 64, 2.0, seed=1)


@pytest.fixture
def trig():
    return get_trigonometric_dictionary(16, 3, 2.0)


@pytest.fixture
def haar():
    return get_haar_dictionary(3, 2.0)


@pytest.fixture
def twins():
    return get_twin_dictionary()
