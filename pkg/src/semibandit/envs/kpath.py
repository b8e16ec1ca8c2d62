"""
The K-path construction.

L/K disjoint paths of K consecutive items. All items of one path share a
single Bernoulli draw, and different paths are independent. Path 0 has mean
0.5 per item; every other path has mean 0.5 - delta/K per item, so every
suboptimal item has Delta_{e,min} = delta.
"""

from typing import Dict, Optional

import numpy as np

from ..exceptions import InvalidInstanceError
from ..models import WeightVector
from ..oracles import check_kpath_instance
from .base import BaseEnvironment


class KPathEnv(BaseEnvironment):
    """
    Within-path correlated Bernoulli environment.

    Attributes:
        L: Number of items
        K: Items per path
        delta: Gap between the first path and every other path
    """

    def __init__(self, L: int, K: int, delta: float):
        check_kpath_instance(L, K)
        delta = float(delta)
        if not np.isfinite(delta) or not 0.0 < delta / K < 0.5:
            raise InvalidInstanceError(
                f"K-path requires 0 < delta/K < 0.5, got delta={delta}, K={K}"
            )
        super().__init__(L)
        self.K = int(K)
        self.delta = delta
        self.num_paths = L // K
        self._path_means = np.full(self.num_paths, 0.5 - delta / K)
        self._path_means[0] = 0.5
        self._means = np.repeat(self._path_means, self.K)
        self._means.setflags(write=False)

    @property
    def mean_weights(self) -> WeightVector:
        return self._means.copy()

    def sample(self, rng: np.random.Generator) -> WeightVector:
        draws = (rng.random(self.num_paths) < self._path_means).astype(float)
        return np.repeat(draws, self.K)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        draws = (rng.random((size, self.num_paths)) < self._path_means).astype(float)
        return np.repeat(draws, self.K, axis=1)

    def analytic_min_gaps(self) -> Optional[Dict[int, float]]:
        return {e: self.delta for e in range(self.K, self.num_items)}

    def describe(self):
        info = super().describe()
        info.update({"K": self.K, "delta": self.delta})
        return info

    def __repr__(self) -> str:
        return f"KPathEnv(L={self.num_items}, K={self.K}, delta={self.delta})"
