"""Parameter containers for the regret bound evaluators."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..exceptions import ParameterError


@dataclass(frozen=True)
class ProblemParams:
    """
    An (L, K, Delta) instance together with the horizon.

    Attributes:
        L: Number of items in the ground set
        K: Maximum number of items in a solution
        n: Horizon; bounds use ln(n), so non-integer values are accepted
        delta: Uniform gap of all suboptimal solutions, when it exists
        per_item_gaps: Minimum gaps of the suboptimal items, when known
    """

    L: int
    K: int
    n: float
    delta: Optional[float] = None
    per_item_gaps: Optional[Sequence[float]] = None

    def __post_init__(self):
        if self.L < 1 or self.K < 1:
            raise ParameterError(f"L and K must be positive, got L={self.L}, K={self.K}")
        if self.K > self.L:
            raise ParameterError(f"K={self.K} cannot exceed L={self.L}")
        if not math.isfinite(self.n) or self.n < 1:
            raise ParameterError(f"Horizon n must be >= 1, got {self.n}")
        if self.delta is not None and not (0 < self.delta <= self.K):
            raise ParameterError(f"Gap delta must lie in (0, K], got {self.delta}")
        if self.per_item_gaps is not None:
            gaps = np.asarray(self.per_item_gaps, dtype=float).reshape(-1)
            if np.any(~((gaps > 0) & (gaps <= self.K))):
                raise ParameterError("All per-item gaps must lie in (0, K]")
            object.__setattr__(self, "per_item_gaps", tuple(gaps.tolist()))

    @property
    def log_n(self) -> float:
        return math.log(self.n)

    def with_horizon(self, n: float) -> "ProblemParams":
        """Same instance with another horizon."""
        return ProblemParams(self.L, self.K, n, self.delta, self.per_item_gaps)


@dataclass(frozen=True)
class SequenceParams:
    """
    Geometric sequences alpha_i = d * alpha**i and beta_i = beta**i.

    Attributes:
        alpha: Ratio of the alpha sequence
        beta: Ratio of the beta sequence
        d: Scale of the alpha sequence
    """

    alpha: float
    beta: float
    d: float

    def __post_init__(self):
        if not (0 < self.alpha < self.beta < math.sqrt(self.alpha) < 1):
            raise ParameterError(
                "Sequence ratios must satisfy 0 < alpha < beta < sqrt(alpha) < 1, "
                f"got alpha={self.alpha}, beta={self.beta}"
            )
        if not self.d > 0:
            raise ParameterError(f"d must be positive, got {self.d}")
