"""
Upper bounds on the expected n-step regret of CombUCB1.

Every evaluator includes the constant term (pi^2/3 + 1) K L so that values
compare directly with simulated pseudo-regret from step 1. Logarithms are
natural.
"""

import math
from typing import Sequence

import numpy as np

from ..exceptions import ParameterError
from ..models import ProblemParams

# Leading constants of the gap-dependent bounds.
K43_UNIFORM_CONSTANT = 48.0
K43_GENERAL_CONSTANT = 96.0
K_UNIFORM_CONSTANT = 267.0
K_GENERAL_CONSTANT = 534.0
GAP_FREE_CONSTANT = 47.0
# Log-term constant of the grid longest-path bound.
GRID_CONSTANT = 4272.0


def constant_term(K: int, L: int) -> float:
    """(pi^2/3 + 1) K L."""
    return (math.pi ** 2 / 3.0 + 1.0) * K * L


def _require_delta(p: ProblemParams) -> float:
    if p.delta is None:
        raise ParameterError("This bound needs the uniform gap delta")
    return float(p.delta)


def _require_gaps(p: ProblemParams) -> np.ndarray:
    if not p.per_item_gaps:
        raise ParameterError("This bound needs a nonempty list of per-item gaps")
    return np.asarray(p.per_item_gaps, dtype=float)


def thm_k43_uniform(p: ProblemParams) -> float:
    """K^(4/3) L (48 / delta) ln n + (pi^2/3 + 1) K L."""
    delta = _require_delta(p)
    return p.K ** (4.0 / 3.0) * p.L * (K43_UNIFORM_CONSTANT / delta) * p.log_n \
        + constant_term(p.K, p.L)


def thm_k43_general(p: ProblemParams) -> float:
    """sum_e K^(4/3) (96 / gap_e) ln n + (pi^2/3 + 1) K L."""
    gaps = _require_gaps(p)
    log_term = float(np.sum(p.K ** (4.0 / 3.0) * K43_GENERAL_CONSTANT / gaps)) * p.log_n
    return log_term + constant_term(p.K, p.L)


def thm_k_uniform(p: ProblemParams) -> float:
    """K L (267 / delta) ln n + (pi^2/3 + 1) K L."""
    delta = _require_delta(p)
    return p.K * p.L * (K_UNIFORM_CONSTANT / delta) * p.log_n + constant_term(p.K, p.L)


def thm_k_general(p: ProblemParams) -> float:
    """sum_e K (534 / gap_e) ln n + (pi^2/3 + 1) K L."""
    gaps = _require_gaps(p)
    log_term = float(np.sum(p.K * K_GENERAL_CONSTANT / gaps)) * p.log_n
    return log_term + constant_term(p.K, p.L)


def thm_gap_free(p: ProblemParams) -> float:
    """
    47 sqrt(K L n ln n) + (pi^2/3 + 1) K L.

    Raises:
        ParameterError: If n < 2
    """
    if p.n < 2:
        raise ParameterError(f"The gap-free bound needs n >= 2, got {p.n}")
    return GAP_FREE_CONSTANT * math.sqrt(p.K * p.L * p.n * p.log_n) + constant_term(p.K, p.L)


def grid_bound(m: int, sigma: float, n: float) -> float:
    """
    Bound 4272 m^2 ln n / sigma on the log-n term of thm_k_general for the
    grid problem. The constant term is not included.

    Raises:
        ParameterError: If m < 1, sigma is outside (0, 1) or n < 1
    """
    if m < 1:
        raise ParameterError(f"Grid size m must be positive, got {m}")
    if not 0.0 < sigma < 1.0:
        raise ParameterError(f"sigma must lie in (0, 1), got {sigma}")
    if not math.isfinite(n) or n < 1:
        raise ParameterError(f"Horizon n must be >= 1, got {n}")
    return GRID_CONSTANT * m ** 2 * math.log(n) / sigma


def bound_curve(evaluator, p: ProblemParams, checkpoints: Sequence[int]) -> np.ndarray:
    """Evaluate ``evaluator`` at every checkpoint horizon."""
    return np.array([evaluator(p.with_horizon(float(t))) for t in checkpoints])
