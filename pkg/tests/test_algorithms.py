import numpy as np
import pytest

from chebygreedy.dev_tools.instances import (
    get_gaussian_dictionary,
    get_haar_dictionary,
    get_planted_signal,
    get_trigonometric_dictionary,
)
from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.greedy import run_greedy, tga, wcga, womp
from chebygreedy.models.traces import Termination, WeaknessPolicy
from chebygreedy.oracle import sigma_m_exact, sigma_m_orthonormal


def _random_vector(space, seed=0):
    return space.vector(np.random.default_rng(seed).standard_normal(space.dim))


@pytest.mark.slow
def test_wcga_matches_womp_in_hilbert_space():
    for instance in range(100):
        dictionary = get_gaussian_dictionary(32, 64, 2.0, seed=instance)
        _, f0 = get_planted_signal(dictionary, K=3, seed=instance)

        chebyshev = wcga(f0, dictionary, max_m=10)
        matching = womp(f0, dictionary, max_m=10)

        assert chebyshev.selected == matching.selected, f'instance {instance}'
        assert chebyshev.termination == matching.termination
        np.testing.assert_allclose(chebyshev.residual_norms, matching.residual_norms, rtol=0, atol=1e-8)


@pytest.mark.parametrize('build', [
    pytest.param(lambda: get_trigonometric_dictionary(15, 7), id='trigonometric'),
    pytest.param(get_haar_dictionary, id='haar'),
])
@pytest.mark.slow
def test_orthonormal_bases_agree_with_the_oracle(build):
    basis = build()

    for seed in range(50):
        f = _random_vector(basis.space, seed=seed)

        for m in range(1, 7):
            best = sigma_m_orthonormal(f, basis, m).value

            assert tga(f, basis, m).residual_norms[-1] == pytest.approx(best, abs=1e-10)
            assert womp(f, basis, max_m=m).residual_norm_at(m) == pytest.approx(best, abs=1e-10)
            assert sigma_m_exact(f, basis, m).value == pytest.approx(best, abs=1e-10)


def test_tga_keeps_the_largest_coefficients(haar):
    f = haar.space.vector(haar.matrix @ np.array([0.1, -3.0, 0.0, 2.0, 0.5, 0.0, 0.0, -0.2]))

    trace = tga(f, haar, 3)

    assert trace.selected == [1, 3, 4]
    assert trace.termination == Termination.MAX_ITERS


def test_tga_stops_on_exhausted_coefficients(haar):
    f = haar.space.vector(haar.matrix @ np.array([0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]))

    trace = tga(f, haar, 4)

    assert trace.selected == [1]
    assert trace.termination == Termination.RESIDUAL_TOL


def test_tga_needs_a_basis(gaussian):
    with pytest.raises(DomainError):
        tga(_random_vector(gaussian.space), gaussian, 2)


def test_womp_needs_hilbert_space():
    dictionary = get_gaussian_dictionary(16, 8, 4.0)

    with pytest.raises(DomainError):
        womp(_random_vector(dictionary.space), dictionary)


def test_budget_beyond_dictionary_size(trig):
    with pytest.raises(StructuralError):
        wcga(_random_vector(trig.space), trig, max_m=trig.size + 1)


def test_unknown_algorithm(trig):
    with pytest.raises(StructuralError):
        run_greedy('omp', _random_vector(trig.space), trig)


def test_twin_tie_goes_to_lowest_index(twins):
    f0 = twins.element(0)

    for trace in (wcga(f0, twins), womp(f0, twins)):
        assert trace.selected == [0]
        assert trace.residual_norms[-1] <= 1e-12
        assert trace.termination == Termination.RESIDUAL_TOL


def test_orthogonal_signal_has_zero_functionals(trig):
    points = trig.space.grid_axes()[0]
    f0 = trig.space.vector(np.cos(2 * np.pi * 5 * points))

    trace = wcga(f0, trig)

    assert trace.iterations == 0
    assert trace.termination == Termination.ZERO_FUNCTIONALS


@pytest.mark.parametrize('scale', [1e-8, 1e8])
def test_zero_functional_stop_ignores_the_signal_scale(trig, scale):
    points = trig.space.grid_axes()[0]
    f0 = trig.space.vector(scale * np.cos(2 * np.pi * 5 * points))

    for trace in (wcga(f0, trig), womp(f0, trig)):
        assert trace.iterations == 0
        assert trace.termination == Termination.ZERO_FUNCTIONALS


def test_adversarial_weak_selection(gaussian):
    f0 = _random_vector(gaussian.space, seed=2)
    policy = WeaknessPolicy(t=0.5, mode='adversarial_weak')

    trace = wcga(f0, gaussian, policy, max_m=12)

    assert trace.iterations == 12
    assert trace.satisfies_weak_selection(0.5)
    assert trace.is_monotone()


@pytest.mark.parametrize('p', [1.5, 3.0, 4.0])
def test_wcga_residuals_decrease_in_lp(p):
    dictionary = get_gaussian_dictionary(16, 24, p, seed=4)
    f0 = _random_vector(dictionary.space, seed=4)

    trace = wcga(f0, dictionary, max_m=8)

    assert trace.iterations == 8
    assert trace.is_monotone()
    assert trace.satisfies_weak_selection(1.0)
    assert trace.residual_norms[-1] < trace.residual_norms[0]


def test_planted_sparse_signals_are_recovered(gaussian):
    recovered = 0

    for trial in range(10):
        rep, f0 = get_planted_signal(gaussian, K=3, seed=7, trial=trial)
        trace = wcga(f0, gaussian, max_m=3)
        recovered += sorted(trace.selected) == list(rep.support) and trace.residual_norms[-1] <= 1e-9 * f0.norm()

    assert recovered >= 9
