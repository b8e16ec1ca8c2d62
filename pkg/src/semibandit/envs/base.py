"""Base environment class defining the interface for stochastic weight sources."""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

import numpy as np

from ..models import WeightVector


class BaseEnvironment(ABC):
    """
    Abstract base class for distributions P over [0, 1]^L.

    An environment is immutable after construction. Randomness comes only
    from the generator passed to ``sample``, so each run can own its stream.
    The mean vector is meant for regret accounting in the harness; agents
    only ever receive sampled weights.
    """

    def __init__(self, num_items: int):
        """
        Initialize the environment.

        Args:
            num_items: Size L of the ground set
        """
        self.num_items = int(num_items)

    @property
    def L(self) -> int:
        return self.num_items

    @property
    @abstractmethod
    def mean_weights(self) -> WeightVector:
        """Expected weight vector w_bar (a fresh copy)."""

    @abstractmethod
    def sample(self, rng: np.random.Generator) -> WeightVector:
        """
        Draw one realization w_t ~ P.

        Args:
            rng: Generator owned by the current run

        Returns:
            Vector of length L with entries in [0, 1]
        """

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draw ``size`` realizations as rows of a (size, L) array."""
        return np.vstack([self.sample(rng) for _ in range(size)])

    def analytic_min_gaps(self) -> Optional[Dict[int, float]]:
        """
        Closed-form Delta_{e,min} for the suboptimal items, when the
        construction provides one. None means gaps must be computed.
        """
        return None

    def get_environment_name(self) -> str:
        return self.__class__.__name__

    def describe(self) -> Dict[str, Any]:
        """Summary of the environment for logs and result metadata."""
        return {"environment": self.get_environment_name(), "L": self.num_items}

    def __repr__(self) -> str:
        return f"{self.get_environment_name()}(L={self.num_items})"


def sample(env: BaseEnvironment, rng: np.random.Generator) -> WeightVector:
    """Draw one weight vector from ``env`` using ``rng``."""
    return env.sample(rng)
