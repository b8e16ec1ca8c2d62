"""Tests for the numeric constants behind the bounds."""

import math

import pytest

from semibandit.bounds import (
    REFERENCE_ALPHA,
    REFERENCE_BETA,
    appendix_constant,
    cascade_condition,
    cascade_partial_sum,
    confidence_failure_probability,
    crossover_k,
    gap_free_epsilon,
    gap_free_leading_constant,
    gap_free_tradeoff,
    induced_d,
    init_regret_bound,
    k43_event_constant,
    optimize_sequence_constants,
    sequence_params,
    unit_epsilon_horizon,
)
from semibandit.exceptions import ParameterError


def test_appendix_constant_at_reference():
    value = appendix_constant()
    assert 265 < value < 267
    assert value == pytest.approx(266.2, abs=0.5)
    assert appendix_constant(REFERENCE_ALPHA, REFERENCE_BETA) == value


def test_appendix_constant_rejects_infeasible_ratios():
    with pytest.raises(ParameterError):
        appendix_constant(0.3, 0.2)
    with pytest.raises(ParameterError):
        appendix_constant(0.1459, 0.5)


def test_cascade_sum_matches_condition():
    """With the induced d, the cascade condition is met with equality."""
    s = sequence_params(REFERENCE_ALPHA, REFERENCE_BETA)
    assert s.d == pytest.approx(induced_d(REFERENCE_ALPHA, REFERENCE_BETA))
    assert cascade_condition(s) == pytest.approx(1.0)
    total = cascade_partial_sum(s)
    assert total == pytest.approx(1.0, abs=1e-9)
    assert total <= 1.0 + 1e-9
    assert cascade_partial_sum(s, terms=5) < total
    with pytest.raises(ParameterError):
        cascade_partial_sum(s, terms=0)


def test_optimize_sequence_constants():
    alpha, beta, objective = optimize_sequence_constants()
    reference = appendix_constant()
    assert 0 < alpha < beta < math.sqrt(alpha) < 1
    assert abs(objective - reference) <= 0.5
    assert objective < 267


def test_k43_event_constant():
    for K in (1, 2, 8, 27):
        assert k43_event_constant(4.0, K ** (2 / 3), K) == pytest.approx(48 * K ** (4 / 3))
    with pytest.raises(ParameterError):
        k43_event_constant(1.0, 1.0, 2)


def test_gap_free_leading_constant():
    value = gap_free_leading_constant()
    assert value == pytest.approx(46.21688, abs=1e-5)
    assert value < 47


def test_unit_epsilon_horizon():
    """The larger root of n = 534 ln n is where epsilon reaches 1."""
    n = unit_epsilon_horizon(1, 1)
    assert n == pytest.approx(534 * math.log(n))
    assert n == pytest.approx(4490.8, abs=0.1)
    assert gap_free_epsilon(1, 1, n) == pytest.approx(1.0)
    assert gap_free_epsilon(1, 1, 2 * n) < 1.0


def test_gap_free_epsilon_minimises_tradeoff():
    K, L, n = 2, 8, 1e5
    eps = gap_free_epsilon(K, L, n)
    best = gap_free_tradeoff(eps, K, L, n)
    assert best == pytest.approx(2 * math.sqrt(534 * K * L * n * math.log(n)))
    assert best < gap_free_tradeoff(0.9 * eps, K, L, n)
    assert best < gap_free_tradeoff(1.1 * eps, K, L, n)
    with pytest.raises(ParameterError):
        gap_free_epsilon(K, L, 1)
    with pytest.raises(ParameterError):
        gap_free_tradeoff(0.0, K, L, n)


def test_crossover_k():
    assert crossover_k() == pytest.approx(172.1, abs=0.05)
    assert crossover_k() < 173


def test_small_helpers():
    assert confidence_failure_probability(1) == 2.0
    assert confidence_failure_probability(2) == pytest.approx(0.25)
    assert init_regret_bound(2, 4) == 8.0
    with pytest.raises(ParameterError):
        confidence_failure_probability(0.5)
