import math

import numpy as np
import pytest

from chebygreedy.analysis import (
    AnalysisConfig,
    analyze,
    check_domination,
    check_equivalence,
    coherence,
    ell1_incoherence_V,
    nikolskii_C1,
    rip_delta,
    signal_incoherence_V,
    transfer_constants,
    unconditionality_U,
    unconditionality_from_rip,
)
from chebygreedy.dev_tools.instances import get_gaussian_dictionary, get_space, get_trigonometric_dictionary
from chebygreedy.errors import DomainError
from chebygreedy.models.dictionaries import SparseRepresentation, build_custom


def test_coherence(trig, twins):
    assert coherence(trig) == pytest.approx(0.0, abs=1e-12)
    assert coherence(twins) == pytest.approx(1.0)

    with pytest.raises(DomainError):
        coherence(build_custom(np.ones(8), get_space(8)))


def test_rip_of_an_orthonormal_system(trig):
    delta = rip_delta(trig, 3)

    assert delta.value == pytest.approx(0.0, abs=1e-12)
    assert delta.method == 'exact'


def test_rip_arguments(trig):
    with pytest.raises(DomainError):
        rip_delta(trig, 0)

    with pytest.raises(DomainError):
        rip_delta(get_trigonometric_dictionary(16, 3, 4.0), 2)


def test_unconditionality_from_rip():
    assert unconditionality_from_rip(0.0) == 1.0
    assert unconditionality_from_rip(0.6) == pytest.approx(2.0)

    with pytest.raises(DomainError):
        unconditionality_from_rip(1.0)


def test_orthonormal_constants_are_one(trig):
    assert unconditionality_U(trig, 2, 5).value == pytest.approx(1.0)
    assert nikolskii_C1(trig, 3, 0.5).value == pytest.approx(1.0)
    assert ell1_incoherence_V(trig, 2, 4, 0.5).value == pytest.approx(1.0)


def test_dependent_supports_give_infinite_constants(twins):
    assert math.isinf(ell1_incoherence_V(twins, 1, 2, 0.5).value)
    assert math.isinf(unconditionality_U(twins, 1, 2).value)
    assert nikolskii_C1(twins, 1, 0.5).value == pytest.approx(1.0)


@pytest.mark.slow
def test_constant_implications_hold_on_small_instances():
    config = AnalysisConfig(seed=11)

    for instance in range(30):
        dictionary = get_gaussian_dictionary(8, 6, 2.0, seed=instance)
        report = analyze(dictionary, K=(1, 2, 3), D=6, r=(0.5, 1.0), rip_orders=range(1, 7), config=config)

        assert all(e['method'] == 'exact' for e in report.ell1_incoherence.values())
        assert report.violations() == [], f'instance {instance}'


def test_constant_implications_hold_outside_hilbert_space():
    dictionary = get_gaussian_dictionary(8, 5, 3.0, seed=2)
    report = analyze(dictionary, K=(1, 2), D=4, r=(0.5,), config=AnalysisConfig(ascent_supports=8, ascent_starts=4))

    assert report.rip == {}
    assert report.unconditionality[(1, 4)]['method'] == 'sampled'
    assert report.violations() == []


def test_analyze_orthonormal(trig):
    report = analyze(trig, K=(1, 2), D=4)

    assert report.coherence == pytest.approx(0.0, abs=1e-12)
    assert set(report.rip) == {1, 2, 3}
    assert report.violations() == []
    assert report.to_dict()['nikolskii'][0] == {'K': 1, 'r': 0.5, 'value': pytest.approx(1.0), 'method': 'exact'}


def test_domination_of_a_dictionary_by_itself(gaussian):
    assert check_domination(gaussian, gaussian, 2, cap=500).value == pytest.approx(1.0)
    assert check_equivalence(gaussian, gaussian, 2, cap=500)[:2] == (pytest.approx(1.0), pytest.approx(1.0))


def test_domination_across_exponents():
    d1 = get_trigonometric_dictionary(16, 2, 4.0)
    d2 = get_trigonometric_dictionary(16, 2, 2.0)

    estimate = check_domination(d1, d2, 2, config=AnalysisConfig(ascent_starts=4, ascent_iters=100))

    assert estimate.method == 'sampled'
    assert 0.5 < estimate.value < math.inf


def test_transfer_constants():
    assert transfer_constants(B=2.0, C1=1.5, V=3.0) == {'C1': 3.0, 'V': 6.0}
    assert transfer_constants(E1=0.5, E2=1.0, U=2.0) == {'U': 4.0}
    assert transfer_constants(B=2.0) == {}

    with pytest.raises(DomainError):
        transfer_constants(E1=0.0, E2=1.0, U=1.0)


def test_signal_incoherence_on_an_orthonormal_system(trig):
    rep = SparseRepresentation({0: 1.0, 2: -0.5, 5: 2.0})

    estimate = signal_incoherence_V(trig, rep, trig.size, 0.5)

    assert estimate.method == 'exact'
    assert estimate.value <= 1.0 + 1e-9


def test_signal_incoherence_of_twins(twins):
    assert math.isinf(signal_incoherence_V(twins, SparseRepresentation({0: 1.0}), 2, 0.5).value)

    with pytest.raises(DomainError):
        signal_incoherence_V(twins, SparseRepresentation(), 2, 0.5)
