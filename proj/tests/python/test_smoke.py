"""Smoke tests for the python bindings."""

import json
import math
import os

import pytest

homc = pytest.importorskip("homc")


DATA_DIR = os.environ.get(
    "HOMC_DATA", os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data")
)


def chain_4x4_regular():
    with open(os.path.join(DATA_DIR, "chain_4x4_regular.json")) as fh:
        doc = json.load(fh)
    return homc.StochasticTensor(doc["order"], doc["dim"], doc["values"])


def test_linear_indexing_round_trip():
    assert homc.to_linear([2, 1, 1], 2) == 2
    assert homc.from_linear(3, 2, 3) == [1, 2, 1]
    for pos in range(1, 9):
        assert homc.to_linear(homc.from_linear(pos, 2, 3), 2) == pos


def test_validation_and_fibers():
    t = chain_4x4_regular()
    assert homc.validate(t).valid
    fiber = t.fiber([1, 1])
    assert math.isclose(sum(fiber), 1.0, abs_tol=1e-12)


def test_classification_of_the_regular_chain():
    report = homc.classify(chain_4x4_regular())
    assert report.regular.regular
    assert report.regular.witness_k == 10
    assert not report.q_regular.regular
    assert report.ergodic.ergodic
    assert report.irreducible.irreducible


def test_limit_and_both_routes():
    t = chain_4x4_regular()
    outcome = homc.limit_tensor(t)
    assert outcome.kind == homc.LimitKind.RANK_ONE
    pi = outcome.pi.probs
    expected = [2 / 7, 2 / 7, 2 / 7, 1 / 7]
    assert max(abs(a - b) for a, b in zip(pi, expected)) < 1e-9
    eig = homc.limiting_distribution_eig(t)
    assert max(abs(a - b) for a, b in zip(eig.probs, expected)) < 1e-8


def test_cycle_detection():
    slice_ = [0, 1, 0, 0.5, 0, 0.5, 0, 1, 0]
    t = homc.StochasticTensor(3, 3, slice_ * 3)
    outcome = homc.limit_tensor(t)
    assert outcome.kind == homc.LimitKind.CYCLE
    assert outcome.period == 2


def test_no_limit_error_for_initial_dependent_chain():
    t = homc.StochasticTensor(3, 2, [1, 0, 0.5, 0.5, 0.5, 0.5, 0, 1])
    with pytest.raises(homc.NoLimitError):
        homc.limiting_distribution(t)


def test_evolution_walkthrough():
    slice_ = [0, 1, 0, 0.5, 0, 0.5, 0, 1, 0]
    t = homc.StochasticTensor(3, 3, slice_ * 3)
    y0 = homc.JointDistribution([1.0] + [0.0] * 8)
    xs = homc.evolve(t, y0, 3)
    assert xs[0].probs == [0, 1, 0]
    assert xs[1].probs == [0.5, 0, 0.5]
    assert xs[2].probs == [0, 1, 0]


def test_sampling_reproducibility():
    t = chain_4x4_regular()
    a = homc.sample_path(t, [1, 1], 500, seed=7)
    b = homc.sample_path(t, [1, 1], 500, seed=7)
    assert a.states == b.states
    freq = homc.empirical_distribution(a, 100)
    assert math.isclose(sum(freq.probs), 1.0, abs_tol=1e-12)


def test_json_round_trip():
    t = chain_4x4_regular()
    again = homc.loads(homc.dumps(t))
    assert again == t


def test_capacity_errors_surface():
    caps = homc.Caps()
    caps.max_subset_states = 2
    with pytest.raises(homc.CapacityError):
        homc.is_irreducible(chain_4x4_regular(), caps)
