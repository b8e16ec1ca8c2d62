"""Tests for explicit feasible sets and the exhaustive oracle."""

import itertools

import pytest

from semibandit.exceptions import ConfigError, DimensionError, InvalidInstanceError
from semibandit.models import Solution, return_value
from semibandit.oracles import (
    ExhaustiveOracle,
    ExplicitFeasibleSet,
    exhaustive_maximize,
    load_feasible_set,
)


def test_exhaustive_maximize_examples(two_of_four):
    """Test the best pair and the tie-break on equal weights."""
    assert exhaustive_maximize(two_of_four, [0.1, 0.9, 0.8, 0.2]) == Solution((1, 2))
    assert exhaustive_maximize(two_of_four, [0.5, 0.5, 0.5, 0.5]) == Solution((0, 1))
    assert exhaustive_maximize(two_of_four, [0.0, 0.0, 0.0, 0.0]) == Solution((0, 1))


def test_exhaustive_maximize_wrong_length(two_of_four):
    with pytest.raises(DimensionError):
        exhaustive_maximize(two_of_four, [0.1, 0.2, 0.3])


def test_feasible_set_is_sorted_and_deduplicated():
    feasible = ExplicitFeasibleSet(
        [Solution((1, 2)), Solution((0,)), Solution((1, 2))], L=3, K=2
    )
    assert list(feasible.solutions) == [Solution((0,)), Solution((1, 2))]
    assert len(feasible) == 2
    assert feasible.incidence_matrix().tolist() == [[1, 0, 0], [0, 1, 1]]


def test_feasible_set_validation():
    """Test that malformed feasible sets are rejected."""
    with pytest.raises(InvalidInstanceError):
        ExplicitFeasibleSet([], L=2, K=1)
    with pytest.raises(InvalidInstanceError):
        ExplicitFeasibleSet([Solution((0, 1, 2))], L=3, K=2)
    with pytest.raises(InvalidInstanceError):
        ExplicitFeasibleSet([Solution((0, 5))], L=3, K=2)
    with pytest.raises(InvalidInstanceError):
        ExplicitFeasibleSet([Solution((0, 1))], L=3, K=2)


def test_best_value_containing(two_of_four):
    oracle = ExhaustiveOracle(two_of_four)
    w = [0.1, 0.9, 0.8, 0.2]
    assert oracle.best_value_containing(w, 0) == pytest.approx(1.0)
    assert oracle.best_value_containing(w, 3) == pytest.approx(1.1)
    assert oracle.optimal_value(w) == pytest.approx(1.7)


def test_min_gaps_skip_tied_solutions(two_of_four):
    """Tied optima are reported without hiding the gaps of other items."""
    oracle = ExhaustiveOracle(two_of_four)
    w = [0.5, 0.5, 0.5, 0.1]
    gaps, tie_found = oracle.min_gaps(w, oracle.maximize(w))
    assert tie_found
    assert gaps == pytest.approx({2: 0.4, 3: 0.4})


def test_min_gaps_unique_optimum(two_of_four):
    oracle = ExhaustiveOracle(two_of_four)
    w = [0.1, 0.9, 0.8, 0.2]
    gaps, tie_found = oracle.min_gaps(w, Solution((1, 2)))
    assert not tie_found
    assert gaps == pytest.approx({0: 0.7, 3: 0.6})


def test_load_feasible_set(data_dir):
    feasible = load_feasible_set(data_dir / "two_of_four.txt")
    assert feasible.L == 4
    assert feasible.K == 2
    assert len(feasible) == 6


def test_load_feasible_set_reports_line(tmp_path):
    """Test that parse errors carry the offending line number."""
    path = tmp_path / "bad.txt"
    path.write_text("# comment\n3 2\n0 1\n1 x\n", encoding="utf-8")
    with pytest.raises(ConfigError) as exc_info:
        load_feasible_set(path)
    assert exc_info.value.line == 4
    assert "bad.txt:4:" in str(exc_info.value)


def test_load_feasible_set_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_feasible_set(tmp_path / "missing.txt")

    header = tmp_path / "header.txt"
    header.write_text("4\n0 1\n", encoding="utf-8")
    with pytest.raises(ConfigError) as exc_info:
        load_feasible_set(header)
    assert exc_info.value.line == 1

    uncovered = tmp_path / "uncovered.txt"
    uncovered.write_text("3 2\n0 1\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_feasible_set(uncovered)

    duplicate = tmp_path / "duplicate.txt"
    duplicate.write_text("3 2\n0 1 2\n2 2\n", encoding="utf-8")
    with pytest.raises(ConfigError) as exc_info:
        load_feasible_set(duplicate)
    assert exc_info.value.line == 3


def test_near_tie_is_decided_by_ascending_sum():
    """0.1 + 0.2 + 0.3 rounds above 0.6, so the three-item solution wins."""
    feasible = ExplicitFeasibleSet([Solution((0,)), Solution((1, 2, 3))], L=4, K=3)
    oracle = ExhaustiveOracle(feasible)
    weights = [0.6, 0.1, 0.2, 0.3]
    assert return_value(Solution((1, 2, 3)), weights) > return_value(Solution((0,)), weights)
    assert oracle.maximize(weights) == Solution((1, 2, 3))
    assert oracle.best_value_containing(weights, 1) == return_value(Solution((1, 2, 3)), weights)
    assert oracle.best_value_containing(weights, 0) == 0.6


def test_maximize_matches_return_value_on_decimal_weights(rng):
    """Weights on a 0.1 grid produce many rounding-level ties."""
    solutions = [Solution(items) for size in (1, 2, 3)
                 for items in itertools.combinations(range(5), size)]
    oracle = ExhaustiveOracle(ExplicitFeasibleSet(solutions, L=5, K=3))
    for _ in range(300):
        weights = (rng.integers(0, 10, size=5) / 10).tolist()
        values = [return_value(s, weights) for s in oracle.feasible.solutions]
        best = max(values)
        expected = oracle.feasible.solutions[values.index(best)]
        assert oracle.maximize(weights) == expected
        assert return_value(oracle.maximize(weights), weights) == best
