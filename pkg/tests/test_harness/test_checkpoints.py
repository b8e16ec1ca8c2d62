"""Tests for checkpoint schedules and seed derivation."""

import pytest

from semibandit.exceptions import ConfigError
from semibandit.harness import (
    derive_run_seed,
    geometric_checkpoints,
    linear_checkpoints,
    make_rng,
)


def test_linear_checkpoints():
    assert linear_checkpoints(100, 4) == [25, 50, 75, 100]
    assert linear_checkpoints(3, 10) == [1, 2, 3]
    assert linear_checkpoints(7, 1) == [7]


def test_geometric_checkpoints():
    """Points are increasing, start at 100 and end at n."""
    points = geometric_checkpoints(100_000)
    assert points[0] == 100
    assert points[-1] == 100_000
    assert len(points) == 20
    assert all(b > a for a, b in zip(points, points[1:]))
    ratios = [b / a for a, b in zip(points, points[1:])]
    assert max(ratios) / min(ratios) < 1.01


def test_geometric_checkpoints_short_horizons():
    assert geometric_checkpoints(50) == [50]
    assert geometric_checkpoints(1000, count=1) == [1000]
    points = geometric_checkpoints(200, count=50)
    assert points[-1] == 200
    assert len(points) == len(set(points))


def test_checkpoint_errors():
    with pytest.raises(ConfigError):
        geometric_checkpoints(0)
    with pytest.raises(ConfigError):
        linear_checkpoints(10, 0)


def test_run_seeds_are_stable():
    """Seeds depend only on the (master seed, run index) pair."""
    assert derive_run_seed(0, 0) == derive_run_seed(0, 0)
    seeds = {derive_run_seed(0, i) for i in range(100)}
    assert len(seeds) == 100
    assert derive_run_seed(1, 0) != derive_run_seed(0, 0)
    assert 0 <= derive_run_seed(42, 7) < 2 ** 64
    with pytest.raises(ConfigError):
        derive_run_seed(-1, 0)


def test_make_rng():
    first = make_rng(derive_run_seed(3, 1)).random(5)
    second = make_rng(derive_run_seed(3, 1)).random(5)
    assert first.tolist() == second.tolist()
