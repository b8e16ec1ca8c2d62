"""Bernoulli edge weights on the square grid."""

import numpy as np

from ..exceptions import InvalidInstanceError
from ..models import WeightVector
from ..oracles import GridSpec
from .base import BaseEnvironment
from .bernoulli import bernoulli_draw


class GridEnv(BaseEnvironment):
    """
    Independent Bernoulli edges whose means favour the left column and the
    bottom row.

    Edges on the leftmost column or bottommost row have mean 0.5 + sigma/2,
    all others 0.5 - sigma/2, which makes the left-then-bottom path the
    unique optimum.

    Attributes:
        grid: Grid geometry and edge numbering
        sigma: Mean difference between favoured and other edges
    """

    def __init__(self, m: int, sigma: float, allow_degenerate: bool = False):
        """
        Args:
            m: Grid size; the grid has (m+1)^2 nodes
            sigma: Mean gap, in (0, 1)
            allow_degenerate: Also accept sigma = 1 (deterministic weights)
        """
        sigma = float(sigma)
        upper_ok = sigma < 1.0 or (allow_degenerate and sigma == 1.0)
        if not np.isfinite(sigma) or sigma <= 0.0 or not upper_ok:
            raise InvalidInstanceError(f"Grid sigma must lie in (0, 1), got {sigma}")
        self.grid = GridSpec(m)
        super().__init__(self.grid.num_items)
        self.sigma = sigma
        favoured = np.array([self.grid.is_leftmost_or_bottom(e)
                             for e in range(self.num_items)])
        self._means = np.where(favoured, 0.5 + sigma / 2, 0.5 - sigma / 2)
        self._means.setflags(write=False)

    @property
    def m(self) -> int:
        return self.grid.m

    @property
    def mean_weights(self) -> WeightVector:
        return self._means.copy()

    def sample(self, rng: np.random.Generator) -> WeightVector:
        return bernoulli_draw(rng, self._means)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return (rng.random((size, self.num_items)) < self._means).astype(float)

    def describe(self):
        info = super().describe()
        info.update({"m": self.m, "sigma": self.sigma})
        return info

    def __repr__(self) -> str:
        return f"GridEnv(m={self.m}, sigma={self.sigma})"
