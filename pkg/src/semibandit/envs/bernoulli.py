"""Independent Bernoulli weights."""

import numpy as np

from ..exceptions import InvalidInstanceError
from ..models import WeightVector
from ..utils.validators import validate_mean_vector
from .base import BaseEnvironment


def bernoulli_draw(rng: np.random.Generator, means: np.ndarray) -> np.ndarray:
    """One uniform draw per coordinate, 1.0 where it falls below the mean."""
    return (rng.random(means.shape[0]) < means).astype(float)


class IndependentBernoulliEnv(BaseEnvironment):
    """
    Every item is an independent Bernoulli variable with its own mean.

    Attributes:
        means: Per-item success probabilities in [0, 1]
    """

    def __init__(self, means):
        is_valid, errors = validate_mean_vector(means)
        if not is_valid:
            raise InvalidInstanceError("; ".join(errors))
        values = np.array(means, dtype=float)
        super().__init__(values.shape[0])
        values.setflags(write=False)
        self._means = values

    @property
    def mean_weights(self) -> WeightVector:
        return self._means.copy()

    def sample(self, rng: np.random.Generator) -> WeightVector:
        return bernoulli_draw(rng, self._means)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return (rng.random((size, self.num_items)) < self._means).astype(float)
