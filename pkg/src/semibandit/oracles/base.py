"""Base oracle class defining the interface for all offline optimization oracles."""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Tuple

import numpy as np

from ..exceptions import InvalidSolutionError
from ..models import Solution, as_weights, return_value


class BaseOracle(ABC):
    """
    Abstract base class for argmax_{A in Theta} f(A, w) oracles.

    Subclasses describe a feasible set Theta over a ground set of L items and
    solve the offline problem for any nonnegative weights. Every oracle is
    deterministic: ties are broken by a fixed rule documented on the subclass.
    Oracles hold no mutable state after construction.
    """

    def __init__(self, ground_size: int, max_solution_size: int):
        """
        Initialize the oracle.

        Args:
            ground_size: Number of items L
            max_solution_size: Largest solution size K
        """
        self.ground_size = int(ground_size)
        self.max_solution_size = int(max_solution_size)

    @property
    def L(self) -> int:
        return self.ground_size

    @property
    def K(self) -> int:
        return self.max_solution_size

    def maximize(self, weights) -> Solution:
        """
        Return a solution maximizing f(A, w).

        Args:
            weights: Nonnegative weight vector of length L

        Returns:
            Maximizing solution, chosen by the oracle's tie-break rule

        Raises:
            DimensionError: If the weight vector has the wrong length
            InvalidWeightsError: If a weight is negative or not finite
        """
        return self._maximize(as_weights(weights, self.ground_size))

    def best_value_containing(self, weights, item: int) -> float:
        """
        Return max f(A, w) over feasible solutions that contain ``item``.

        Raises:
            InvalidSolutionError: If the item is outside the ground set
        """
        w = as_weights(weights, self.ground_size)
        if not 0 <= int(item) < self.ground_size:
            raise InvalidSolutionError(
                f"Item {item} is outside the ground set of size {self.ground_size}"
            )
        return self._best_value_containing(w, int(item))

    def optimal_value(self, weights) -> float:
        """Return max_{A in Theta} f(A, w)."""
        w = as_weights(weights, self.ground_size)
        return return_value(self._maximize(w), w)

    def min_gaps(self, weights, optimal: Solution,
                 tolerance: float = 1e-12) -> Tuple[Dict[int, float], bool]:
        """
        Compute Delta_{e,min} for every item outside ``optimal``.

        The gap of item e is f(A*, w) minus the best value of a feasible
        solution containing e. Items whose best such value ties with the
        optimum (within ``tolerance``) are left out, and the second return
        value reports that the optimum is not unique.

        Args:
            weights: Mean weights w_bar
            optimal: Optimal solution A* under ``weights``
            tolerance: Values closer than this to the optimum count as ties

        Returns:
            Tuple of (gaps by item, tie_found)
        """
        w = as_weights(weights, self.ground_size)
        best = return_value(optimal, w)
        gaps: Dict[int, float] = {}
        tie_found = False
        for item in range(self.ground_size):
            if item in optimal:
                continue
            gap = best - self._best_value_containing(w, item)
            if gap <= tolerance:
                tie_found = True
                continue
            gaps[item] = gap
        return gaps, tie_found

    @abstractmethod
    def _maximize(self, weights: np.ndarray) -> Solution:
        """Solve the offline problem on validated weights."""

    @abstractmethod
    def _best_value_containing(self, weights: np.ndarray, item: int) -> float:
        """Best value among solutions containing ``item`` (validated input)."""

    @abstractmethod
    def enumerate_solutions(self) -> List[Solution]:
        """
        List every feasible solution.

        Intended for validation on small instances.
        """

    def get_oracle_name(self) -> str:
        return self.__class__.__name__

    def describe(self) -> Dict[str, Any]:
        """Summary of the instance for logs and result metadata."""
        return {
            "oracle": self.get_oracle_name(),
            "L": self.ground_size,
            "K": self.max_solution_size,
        }

    def __repr__(self) -> str:
        return f"{self.get_oracle_name()}(L={self.ground_size}, K={self.max_solution_size})"
