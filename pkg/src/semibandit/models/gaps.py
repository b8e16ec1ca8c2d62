"""Gap structure of a stochastic semi-bandit instance."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

from .solution import Solution


@dataclass(frozen=True)
class RegretReference:
    """
    What the regret accounting needs to know about the instance.

    Only the harness builds and reads this; the agent never sees it.

    Attributes:
        optimal: Optimal solution A* under the mean weights
        optimal_value: f(A*, w_bar)
        mean_weights: Expected weights w_bar
    """

    optimal: Solution
    optimal_value: float
    mean_weights: np.ndarray = field(repr=False, compare=False)


@dataclass
class GapSummary:
    """
    Optimal solution and minimum gaps of the suboptimal items.

    Attributes:
        optimal_value: f(A*, w_bar)
        optimal: A*
        per_item_min_gap: Delta_{e,min} for every suboptimal item e with a
            strictly positive gap
        unique_optimum: False when a second solution attains optimal_value
        warnings: Human-readable notes recorded while computing the summary
    """

    optimal_value: float
    optimal: Solution
    per_item_min_gap: Dict[int, float]
    unique_optimum: bool = True
    warnings: List[str] = field(default_factory=list)

    @property
    def suboptimal_items(self) -> List[int]:
        return sorted(self.per_item_min_gap)

    @property
    def gaps(self) -> np.ndarray:
        """Gaps ordered by item index."""
        return np.array([self.per_item_min_gap[e] for e in self.suboptimal_items])

    @property
    def min_gap(self) -> float:
        return float(self.gaps.min()) if self.per_item_min_gap else float("nan")

    @property
    def max_gap(self) -> float:
        return float(self.gaps.max()) if self.per_item_min_gap else float("nan")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "optimal_value": self.optimal_value,
            "optimal": self.optimal.to_list(),
            "per_item_min_gap": {int(k): float(v) for k, v in self.per_item_min_gap.items()},
            "unique_optimum": self.unique_optimum,
            "warnings": list(self.warnings),
        }
