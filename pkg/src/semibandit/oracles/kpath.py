"""Oracle for the K-path problem: L/K disjoint paths of K consecutive items."""

from typing import List

import numpy as np

from ..exceptions import InvalidInstanceError
from ..models import Solution
from .base import BaseOracle


def check_kpath_instance(L: int, K: int) -> None:
    """
    Raise InvalidInstanceError unless L and K describe a K-path problem.
    """
    if K < 1 or L < 1:
        raise InvalidInstanceError(f"L and K must be positive, got L={L}, K={K}")
    if L % K != 0:
        raise InvalidInstanceError(f"L={L} is not divisible by K={K}")


class KPathOracle(BaseOracle):
    """
    Oracle for the K-path feasible set.

    Path j (zero-based) holds items jK, ..., (j+1)K - 1. The best path is the
    block with the largest weight sum; ties go to the smallest block index.
    """

    def __init__(self, L: int, K: int):
        check_kpath_instance(L, K)
        super().__init__(L, K)
        self.num_paths = L // K

    def path(self, j: int) -> Solution:
        """Solution made of the items of path j."""
        if not 0 <= j < self.num_paths:
            raise IndexError(f"Path {j} out of range [0, {self.num_paths})")
        return Solution(tuple(range(j * self.K, (j + 1) * self.K)))

    def path_of(self, item: int) -> int:
        return item // self.K

    def block_sums(self, weights: np.ndarray) -> np.ndarray:
        return np.asarray(weights, dtype=float).reshape(self.num_paths, self.K).sum(axis=1)

    def _maximize(self, weights: np.ndarray) -> Solution:
        return self.path(int(np.argmax(self.block_sums(weights))))

    def _best_value_containing(self, weights: np.ndarray, item: int) -> float:
        return float(self.block_sums(weights)[self.path_of(item)])

    def enumerate_solutions(self) -> List[Solution]:
        return [self.path(j) for j in range(self.num_paths)]

    def describe(self):
        info = super().describe()
        info["num_paths"] = self.num_paths
        return info


def kpath_maximize(L: int, K: int, weights) -> Solution:
    """
    Return the contiguous block of K items with the largest weight sum.

    Raises:
        InvalidInstanceError: If L is not divisible by K
    """
    return KPathOracle(L, K).maximize(weights)
