"""Long simulations checking regret trends against the bounds."""

import math

import numpy as np
import pytest

from semibandit.envs import EnvSpec, build_problem, gap_summary
from semibandit.harness import (
    RunConfig,
    compare_to_bound,
    geometric_checkpoints,
    instance_bound_curve,
    run_many,
)

pytestmark = pytest.mark.slow

HORIZON = 100_000
GRID_CELLS = [(4, 0.8), (4, 0.4), (4, 0.2), (2, 0.8), (6, 0.8)]


@pytest.fixture(scope="module")
def grid_results():
    """Mean regret curves of the grid cells, 10 runs each."""
    results = {}
    for m, sigma in GRID_CELLS:
        cfg = RunConfig(EnvSpec.grid(m, sigma), HORIZON, num_runs=10, master_seed=0)
        results[(m, sigma)] = run_many(cfg, jobs=2)
    return results


def test_regret_scales_with_inverse_sigma(grid_results):
    for sigma in (0.8, 0.4):
        ratio = grid_results[(4, sigma / 2)].final_mean / grid_results[(4, sigma)].final_mean
        assert 1.4 <= ratio <= 2.9, f"sigma {sigma}: ratio {ratio:.2f}"


def test_regret_scales_with_items(grid_results):
    per_item = [grid_results[(m, 0.8)].final_mean / (2 * m * (m + 1)) for m in (2, 4, 6)]
    assert max(per_item) / min(per_item) <= 2.5


def test_grid_regret_below_envelope(grid_results):
    for (m, sigma), result in grid_results.items():
        env, oracle = build_problem(EnvSpec.grid(m, sigma))
        curve = instance_bound_curve(env, oracle, gap_summary(env, oracle))
        comparison = compare_to_bound(result, curve)
        assert not comparison.any_exceeded, f"m={m}, sigma={sigma}"


def test_kpath_regret_below_envelope():
    spec = EnvSpec.kpath(8, 2, 0.2)
    result = run_many(RunConfig(spec, HORIZON, num_runs=20, master_seed=0), jobs=2)
    env, oracle = build_problem(spec)
    comparison = compare_to_bound(result, instance_bound_curve(env, oracle))
    assert not comparison.any_exceeded
    assert comparison.max_ratio < 1


def test_kpath_regret_grows_logarithmically():
    """Per-step regret over the last geometric intervals falls and regret / ln n levels off."""
    checkpoints = sorted(set(geometric_checkpoints(HORIZON)) | {10_000})
    cfg = RunConfig(EnvSpec.kpath(8, 2, 0.2), HORIZON, num_runs=50, master_seed=0,
                    checkpoints=checkpoints)
    result = run_many(cfg, jobs=2)
    increments = np.diff(result.mean)[-5:]
    lengths = np.diff(result.checkpoints)[-5:]
    per_step = increments / lengths
    assert np.all(np.diff(per_step) < 0), per_step.tolist()
    # the intervals have equal width in ln t, so C ln t growth keeps the raw increments level
    assert increments.max() / increments.min() <= 1.5, increments.tolist()

    at = dict(zip(result.checkpoints.tolist(), result.mean.tolist()))
    late = at[HORIZON] / math.log(HORIZON)
    early = at[10_000] / math.log(10_000)
    assert abs(late / early - 1) <= 0.35, (at[10_000], at[HORIZON])
