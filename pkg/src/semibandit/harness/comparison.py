"""Empirical regret curves against bound curves."""

from typing import Callable, Optional

import numpy as np

from ..bounds import constant_term, thm_k_general, thm_k_uniform
from ..envs import BaseEnvironment, KPathEnv, gap_summary
from ..models import AggregateResult, BoundComparison, GapSummary, ProblemParams
from ..oracles import BaseOracle

BoundCurve = Callable[[float], float]


def compare_to_bound(agg: AggregateResult, bound_curve: BoundCurve) -> BoundComparison:
    """
    Divide the mean pseudo-regret by the bound at every checkpoint.

    An infinite bound gives ratio 0. A zero bound gives ratio 0 when the
    regret is also zero and infinity otherwise.
    """
    checkpoints = np.asarray(agg.checkpoints)
    empirical = np.asarray(agg.mean, dtype=float)
    bound = np.array([bound_curve(float(t)) for t in checkpoints], dtype=float)
    ratios = np.zeros_like(empirical)
    finite = np.isfinite(bound) & (bound > 0)
    ratios[finite] = empirical[finite] / bound[finite]
    zero = bound == 0
    ratios[zero] = np.where(empirical[zero] > 0, np.inf, 0.0)
    return BoundComparison(
        checkpoints=checkpoints,
        empirical=empirical,
        bound=bound,
        ratios=ratios,
        exceeded=empirical > bound,
    )


def instance_bound_curve(env: BaseEnvironment, oracle: BaseOracle,
                         summary: Optional[GapSummary] = None) -> BoundCurve:
    """
    Upper-bound curve for a concrete instance.

    K-path instances use the uniform-gap bound with their delta; all other
    instances use the per-item bound with their exact minimum gaps. An
    instance without suboptimal items gets the constant term only.
    """
    K, L = oracle.max_solution_size, oracle.ground_size
    if isinstance(env, KPathEnv):
        params = ProblemParams(L, K, 1.0, delta=env.delta)
        return lambda t: thm_k_uniform(params.with_horizon(max(t, 1.0)))
    if summary is None:
        summary = gap_summary(env, oracle)
    if not summary.per_item_min_gap:
        return lambda t: constant_term(K, L)
    params = ProblemParams(L, K, 1.0, per_item_gaps=summary.gaps.tolist())
    return lambda t: thm_k_general(params.with_horizon(max(t, 1.0)))
