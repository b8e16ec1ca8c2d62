"""Agent statistics and per-step records."""

from dataclasses import dataclass, field
from typing import Any, Dict

import numpy as np

from .solution import Solution


@dataclass
class AgentState:
    """
    Per-item statistics of a CombUCB1 agent.

    Attributes:
        counts: T(e), number of observations of each item
        means: running average of the observed weights of each item
        step: index t of the next step to play (starts at 1)
    """

    counts: np.ndarray
    means: np.ndarray
    step: int = 1

    def __post_init__(self):
        self.counts = np.asarray(self.counts, dtype=np.int64)
        self.means = np.asarray(self.means, dtype=float)
        if self.counts.shape != self.means.shape or self.counts.ndim != 1:
            raise ValueError("counts and means must be one-dimensional and equally long")
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")

    @classmethod
    def empty(cls, num_items: int) -> "AgentState":
        """State before any observation: zero counts, zero means, step 1."""
        return cls(np.zeros(num_items, dtype=np.int64), np.zeros(num_items), 1)

    @property
    def num_items(self) -> int:
        return int(self.counts.shape[0])

    def is_initialized(self) -> bool:
        """True when every item has been observed at least once."""
        return bool(np.all(self.counts >= 1))

    def copy(self) -> "AgentState":
        return AgentState(self.counts.copy(), self.means.copy(), self.step)

    def __repr__(self) -> str:
        return (f"AgentState(L={self.num_items}, step={self.step}, "
                f"observations={int(self.counts.sum())})")


@dataclass(frozen=True)
class StepRecord:
    """
    Outcome of one interaction with the environment.

    Attributes:
        step: Step index t
        chosen: Solution A_t played at this step
        realized_return: f(A_t, w_t)
        pseudo_regret: f(A*, w_bar) - f(A_t, w_bar)
        realized_regret: f(A*, w_t) - f(A_t, w_t)
        metadata: Extra flags (e.g. whether the step belongs to Init)
    """

    step: int
    chosen: Solution
    realized_return: float
    pseudo_regret: float
    realized_regret: float
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)
