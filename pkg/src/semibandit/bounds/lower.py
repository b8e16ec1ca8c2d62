"""Lower bounds for the K-path problem."""

import math

from ..exceptions import InvalidInstanceError
from ..models import ProblemParams


def _check_kpath(p: ProblemParams) -> None:
    if p.L % p.K != 0:
        raise InvalidInstanceError(f"L={p.L} is not divisible by K={p.K}")


def lower_bound_gap(p: ProblemParams) -> float:
    """
    Coefficient (L - K) K / (4 delta) of ln n in the asymptotic lower bound
    for consistent algorithms on the K-path problem.

    Raises:
        InvalidInstanceError: If L is not divisible by K, delta is missing,
            or delta / K is outside (0, 0.5)
    """
    _check_kpath(p)
    if p.delta is None or not 0.0 < p.delta / p.K < 0.5:
        raise InvalidInstanceError(
            f"The gap-dependent lower bound needs 0 < delta/K < 0.5, got delta={p.delta}"
        )
    return (p.L - p.K) * p.K / (4.0 * p.delta)


def lower_bound_gap_free(p: ProblemParams) -> float:
    """
    min(sqrt(K L n), K n) / 20.

    Raises:
        InvalidInstanceError: If L is not divisible by K
    """
    _check_kpath(p)
    return min(math.sqrt(p.K * p.L * p.n), p.K * p.n) / 20.0
