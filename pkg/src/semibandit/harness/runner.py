"""Seeded episodes and their aggregation across runs."""

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..agents import init_trace, step
from ..envs import BaseEnvironment, build_problem, gap_summary, regret_reference
from ..models import AggregateResult, RegretTrace
from ..oracles import BaseOracle
from ..utils.logger import get_logger
from .checkpoints import derive_run_seed, make_rng
from .config import RunConfig

logger = get_logger(__name__)

Problem = Tuple[BaseEnvironment, BaseOracle]


def run_episode(cfg: RunConfig, run_index: int,
                problem: Optional[Problem] = None) -> RegretTrace:
    """
    Run Init followed by UCB steps up to the horizon and record regret.

    Init steps count towards both regret totals. If the horizon ends before
    Init has observed every item, the trace is marked truncated.

    Args:
        cfg: Run configuration
        run_index: Index of this run; selects the run's seed
        problem: Prebuilt (environment, oracle); built from ``cfg.env`` if omitted

    Returns:
        Cumulative regret at every checkpoint
    """
    env, oracle = problem if problem is not None else build_problem(cfg.env)
    reference = regret_reference(env, oracle)
    run_seed = derive_run_seed(cfg.master_seed, run_index)
    rng = make_rng(run_seed)
    checkpoints = cfg.resolved_checkpoints()
    horizon = cfg.horizon

    pseudo_at: List[float] = []
    realized_at: List[float] = []
    pseudo = realized = 0.0
    pending = 0

    init_result = init_trace(oracle, env, rng, reference, max_steps=horizon)
    for record in init_result.records:
        pseudo += record.pseudo_regret
        realized += record.realized_regret
        if pending < len(checkpoints) and record.step == checkpoints[pending]:
            pseudo_at.append(pseudo)
            realized_at.append(realized)
            pending += 1

    state = init_result.state
    if not init_result.complete:
        logger.warning("Run %d: horizon %d ended during Init", run_index, horizon)
    else:
        for t in range(init_result.first_step, horizon + 1):
            state, record = step(state, oracle, env, rng, reference)
            pseudo += record.pseudo_regret
            realized += record.realized_regret
            if pending < len(checkpoints) and t == checkpoints[pending]:
                pseudo_at.append(pseudo)
                realized_at.append(realized)
                pending += 1

    logger.debug("Run %d (seed %d): pseudo-regret %.3f after %d steps",
                 run_index, run_seed, pseudo, horizon)
    return RegretTrace(
        checkpoints=np.asarray(checkpoints[:pending]),
        cumulative_pseudo=np.asarray(pseudo_at),
        cumulative_realized=np.asarray(realized_at),
        run_seed=run_seed,
        run_index=run_index,
        truncated=not init_result.complete,
        metadata={
            "first_step": init_result.first_step,
            "init_calls": init_result.oracle_calls,
            "final_counts_sum": int(state.counts.sum()),
        },
    )


def aggregate(traces: Sequence[RegretTrace]) -> AggregateResult:
    """
    Per-checkpoint statistics of cumulative pseudo-regret.

    Traces are ordered by run index before reduction so the result does not
    depend on completion order.
    """
    if not traces:
        raise ValueError("Cannot aggregate an empty list of traces")
    ordered = sorted(traces, key=lambda trace: trace.run_index)
    checkpoints = ordered[0].checkpoints
    for trace in ordered:
        if not np.array_equal(trace.checkpoints, checkpoints):
            raise ValueError("All traces must share the same checkpoints")
    values = np.vstack([trace.cumulative_pseudo for trace in ordered])
    return AggregateResult(
        checkpoints=checkpoints.copy(),
        mean=values.mean(axis=0),
        std=values.std(axis=0),
        minimum=values.min(axis=0),
        maximum=values.max(axis=0),
        num_runs=len(ordered),
        traces=ordered,
    )


def run_many(cfg: RunConfig, jobs: int = 1, progress: bool = False) -> AggregateResult:
    """
    Run ``cfg.num_runs`` independent episodes and aggregate them.

    Args:
        cfg: Run configuration
        jobs: Worker processes; 1 runs everything in this process
        progress: Show a progress bar

    Returns:
        Aggregate over all runs, with instance metadata attached
    """
    env, oracle = build_problem(cfg.env)
    summary = gap_summary(env, oracle)
    logger.info("Running %d run(s) of %s for %d steps",
                cfg.num_runs, cfg.env.label(), cfg.horizon)

    indices = range(cfg.num_runs)
    bar = tqdm(total=cfg.num_runs, desc=cfg.env.label(), disable=not progress, leave=False)
    traces: List[RegretTrace] = []
    if jobs <= 1 or cfg.num_runs == 1:
        for i in indices:
            traces.append(run_episode(cfg, i, (env, oracle)))
            bar.update(1)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for trace in pool.map(run_episode, [cfg] * cfg.num_runs, indices):
                traces.append(trace)
                bar.update(1)
    bar.close()

    result = aggregate(traces)
    result.metadata.update({
        "optimal": summary.optimal.to_list(),
        "optimal_value": summary.optimal_value,
        "unique_optimum": summary.unique_optimum,
        "warnings": list(summary.warnings),
        "truncated_runs": sum(trace.truncated for trace in traces),
    })
    logger.info("Mean final pseudo-regret %.3f (std %.3f)", result.final_mean, result.final_std)
    return result
