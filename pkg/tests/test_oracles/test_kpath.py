"""Tests for the K-path oracle."""

import pytest

from semibandit.exceptions import InvalidInstanceError
from semibandit.models import Solution
from semibandit.oracles import KPathOracle, kpath_maximize


def test_kpath_maximize_examples():
    assert kpath_maximize(4, 2, [0.5, 0.5, 0.25, 0.25]) == Solution((0, 1))
    assert kpath_maximize(4, 2, [0.0, 0.0, 1.0, 1.0]) == Solution((2, 3))
    assert kpath_maximize(6, 3, [0.1, 0.1, 0.1, 0.9, 0.0, 0.0]) == Solution((3, 4, 5))


def test_kpath_tie_goes_to_first_path():
    assert kpath_maximize(6, 2, [0.3, 0.3, 0.6, 0.0, 0.6, 0.0]) == Solution((0, 1))


def test_kpath_rejects_indivisible_instance():
    with pytest.raises(InvalidInstanceError):
        kpath_maximize(5, 2, [0.1] * 5)
    with pytest.raises(InvalidInstanceError):
        KPathOracle(4, 0)


def test_kpath_paths_and_gaps():
    """Test path layout and the generic per-item gaps."""
    oracle = KPathOracle(6, 2)
    assert oracle.num_paths == 3
    assert oracle.path(1) == Solution((2, 3))
    assert oracle.path_of(5) == 2
    assert oracle.enumerate_solutions() == [Solution((0, 1)), Solution((2, 3)), Solution((4, 5))]
    with pytest.raises(IndexError):
        oracle.path(3)

    w = [0.5, 0.5, 0.25, 0.25, 0.0, 0.5]
    gaps, tie_found = oracle.min_gaps(w, oracle.maximize(w))
    assert not tie_found
    assert gaps == pytest.approx({2: 0.5, 3: 0.5, 4: 0.5, 5: 0.5})
    assert oracle.describe() == {"oracle": "KPathOracle", "L": 6, "K": 2, "num_paths": 3}
