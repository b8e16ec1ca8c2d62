"""
Numeric constants behind the regret bounds.

The 267/534 bounds rest on two geometric sequences, alpha_i = d alpha^i and
beta_i = beta^i. Their ratios must satisfy 0 < alpha < beta < sqrt(alpha) < 1
and the cascade condition sqrt(6/d) (1 - beta) / (sqrt(alpha) - beta) <= 1.
Taking the smallest admissible d, the leading constant is
d alpha / (beta - alpha), minimised numerically near alpha = 0.1459,
beta = 0.2360.
"""

import math
from typing import Tuple

import numpy as np
from scipy.optimize import brentq, minimize

from ..exceptions import ParameterError
from ..models import SequenceParams
from .upper import K43_GENERAL_CONSTANT, K_GENERAL_CONSTANT

REFERENCE_ALPHA = 0.1459
REFERENCE_BETA = 0.2360


def induced_d(alpha: float, beta: float) -> float:
    """Smallest d for which the cascade condition holds: 6 ((1-beta)/(sqrt(alpha)-beta))^2."""
    return 6.0 * ((1.0 - beta) / (math.sqrt(alpha) - beta)) ** 2


def sequence_params(alpha: float, beta: float) -> SequenceParams:
    """SequenceParams with d set to ``induced_d``; validates the ratios."""
    if not (0 < alpha < beta < math.sqrt(alpha) < 1):
        raise ParameterError(
            "Sequence ratios must satisfy 0 < alpha < beta < sqrt(alpha) < 1, "
            f"got alpha={alpha}, beta={beta}"
        )
    return SequenceParams(alpha, beta, induced_d(alpha, beta))


def appendix_constant(alpha: float = REFERENCE_ALPHA, beta: float = REFERENCE_BETA) -> float:
    """
    Leading constant d alpha / (beta - alpha) with d = induced_d(alpha, beta).

    Raises:
        ParameterError: If the ratios violate 0 < alpha < beta < sqrt(alpha) < 1
    """
    s = sequence_params(alpha, beta)
    return s.d * s.alpha / (s.beta - s.alpha)


def cascade_condition(s: SequenceParams) -> float:
    """Closed form sqrt(6/d) (1 - beta) / (sqrt(alpha) - beta); must be <= 1."""
    return math.sqrt(6.0 / s.d) * (1.0 - s.beta) / (math.sqrt(s.alpha) - s.beta)


def cascade_partial_sum(s: SequenceParams, terms: int = 200) -> float:
    """sqrt(6) * sum_{i=1..terms} (beta^(i-1) - beta^i) / sqrt(d alpha^i)."""
    if terms < 1:
        raise ParameterError(f"terms must be positive, got {terms}")
    i = np.arange(1, terms + 1, dtype=float)
    summands = (s.beta ** (i - 1) - s.beta ** i) / np.sqrt(s.d * s.alpha ** i)
    return math.sqrt(6.0) * float(np.sum(summands))


def _objective(x: np.ndarray) -> float:
    alpha, share = float(x[0]), float(x[1])
    beta = alpha + share * (math.sqrt(alpha) - alpha)
    return appendix_constant(alpha, beta)


def optimize_sequence_constants(grid_size: int = 60) -> Tuple[float, float, float]:
    """
    Minimise ``appendix_constant`` over the feasible ratios.

    beta is parametrised as alpha + share (sqrt(alpha) - alpha) with share in
    (0, 1), which keeps every point of the box feasible. A coarse grid search
    seeds an L-BFGS-B refinement.

    Returns:
        Tuple of (alpha, beta, objective)
    """
    eps = 1e-4
    alphas = np.linspace(eps, 1.0 - eps, grid_size)
    shares = np.linspace(eps, 1.0 - eps, grid_size)
    best_x, best_val = None, math.inf
    for a in alphas:
        for s in shares:
            val = _objective(np.array([a, s]))
            if val < best_val:
                best_x, best_val = np.array([a, s]), val
    result = minimize(
        _objective,
        best_x,
        method="L-BFGS-B",
        bounds=[(eps, 1.0 - eps), (eps, 1.0 - eps)],
    )
    x = result.x if result.fun <= best_val else best_x
    alpha = float(x[0])
    beta = alpha + float(x[1]) * (math.sqrt(alpha) - alpha)
    return alpha, beta, appendix_constant(alpha, beta)


def k43_event_constant(alpha: float, d: float, K: int) -> float:
    """
    6 (alpha K^2 / d + alpha d^2 / (sqrt(alpha) - 1)^2), the count constant
    of the K^(4/3) bounds. With alpha = 4 and d = K^(2/3) it equals
    48 K^(4/3).

    Raises:
        ParameterError: If alpha <= 0, alpha == 1 or d <= 0
    """
    if alpha <= 0 or alpha == 1.0 or d <= 0:
        raise ParameterError(f"Need alpha > 0, alpha != 1 and d > 0, got alpha={alpha}, d={d}")
    return 6.0 * (alpha / d * K ** 2 + alpha * d ** 2 / (math.sqrt(alpha) - 1.0) ** 2)


def gap_free_epsilon(K: int, L: int, n: float) -> float:
    """
    sqrt(534 K L ln n / n), the gap threshold that balances the two halves of
    the gap-free argument.

    Raises:
        ParameterError: If n < 2
    """
    if n < 2:
        raise ParameterError(f"gap_free_epsilon needs n >= 2, got {n}")
    return math.sqrt(K_GENERAL_CONSTANT * K * L * math.log(n) / n)


def gap_free_tradeoff(eps: float, K: int, L: int, n: float) -> float:
    """g(eps) = 534 K L ln n / eps + eps n, minimised at ``gap_free_epsilon``."""
    if eps <= 0:
        raise ParameterError(f"eps must be positive, got {eps}")
    return K_GENERAL_CONSTANT * K * L * math.log(n) / eps + eps * n


def gap_free_leading_constant() -> float:
    """2 sqrt(534), rounded up to 47 in the gap-free bound."""
    return 2.0 * math.sqrt(K_GENERAL_CONSTANT)


def unit_epsilon_horizon(K: int, L: int) -> float:
    """
    Larger root of n = 534 K L ln n, the horizon at which
    ``gap_free_epsilon`` equals 1.
    """
    c = K_GENERAL_CONSTANT * K * L
    return brentq(lambda n: n - c * math.log(n), c * math.e, 2.0 * c * math.log(c))


def confidence_failure_probability(t: float) -> float:
    """2 exp(-3 ln t) = 2 t^-3, the chance one confidence interval fails at step t."""
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    return 2.0 * t ** -3.0


def init_regret_bound(K: int, L: int) -> float:
    """Init takes at most L steps of regret at most K each."""
    return float(K * L)


def crossover_k() -> float:
    """(534/96)^3: below this K the K^(4/3) bounds are the tighter ones."""
    return (K_GENERAL_CONSTANT / K43_GENERAL_CONSTANT) ** 3
