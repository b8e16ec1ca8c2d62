"""Regret traces recorded by the experiment harness."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np


@dataclass
class RegretTrace:
    """
    Cumulative regret of one run, sampled at checkpoints.

    Attributes:
        checkpoints: Step indices at which the totals were recorded
        cumulative_pseudo: Sum of the gaps of the chosen solutions
        cumulative_realized: Sum of f(A*, w_t) - f(A_t, w_t)
        run_seed: Seed of the run's random stream
        run_index: Position of the run in its experiment
        truncated: True when the horizon ended before Init completed
        metadata: Extra information (first step after Init, tie flags, ...)
    """

    checkpoints: np.ndarray
    cumulative_pseudo: np.ndarray
    cumulative_realized: np.ndarray
    run_seed: int
    run_index: int = 0
    truncated: bool = False
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.checkpoints = np.asarray(self.checkpoints, dtype=np.int64)
        self.cumulative_pseudo = np.asarray(self.cumulative_pseudo, dtype=float)
        self.cumulative_realized = np.asarray(self.cumulative_realized, dtype=float)
        if not (len(self.checkpoints) == len(self.cumulative_pseudo)
                == len(self.cumulative_realized)):
            raise ValueError("Trace arrays must share the checkpoint length")

    @property
    def final_pseudo(self) -> float:
        return float(self.cumulative_pseudo[-1]) if len(self.cumulative_pseudo) else 0.0

    def __len__(self) -> int:
        return len(self.checkpoints)


@dataclass
class AggregateResult:
    """
    Per-checkpoint statistics of the cumulative pseudo-regret across runs.

    Attributes:
        checkpoints: Step indices shared by all runs
        mean: Mean cumulative pseudo-regret
        std: Population standard deviation (zero for a single run)
        minimum: Smallest value across runs
        maximum: Largest value across runs
        num_runs: Number of aggregated runs
        traces: The individual traces, ordered by run index
        metadata: Instance information shared by all runs
    """

    checkpoints: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    minimum: np.ndarray
    maximum: np.ndarray
    num_runs: int
    traces: List[RegretTrace] = field(default_factory=list, repr=False)
    metadata: Dict[str, Any] = field(default_factory=dict, repr=False)

    @property
    def final_mean(self) -> float:
        return float(self.mean[-1])

    @property
    def final_std(self) -> float:
        return float(self.std[-1])


@dataclass
class BoundComparison:
    """
    Empirical mean regret divided by a bound at every checkpoint.

    Attributes:
        checkpoints: Step indices
        empirical: Mean cumulative pseudo-regret
        bound: Bound value at each checkpoint
        ratios: empirical / bound (0 where the bound is infinite)
        exceeded: True where the empirical mean is above the bound
    """

    checkpoints: np.ndarray
    empirical: np.ndarray
    bound: np.ndarray
    ratios: np.ndarray
    exceeded: np.ndarray

    @property
    def max_ratio(self) -> float:
        return float(np.max(self.ratios)) if len(self.ratios) else 0.0

    @property
    def any_exceeded(self) -> bool:
        return bool(np.any(self.exceeded))
