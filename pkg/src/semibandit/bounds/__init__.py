"""Bounds package: closed-form regret bounds and the constants behind them."""

from .upper import (
    constant_term,
    thm_k43_uniform,
    thm_k43_general,
    thm_k_uniform,
    thm_k_general,
    thm_gap_free,
    grid_bound,
    bound_curve,
)
from .lower import lower_bound_gap, lower_bound_gap_free
from .constants import (
    REFERENCE_ALPHA,
    REFERENCE_BETA,
    induced_d,
    sequence_params,
    appendix_constant,
    cascade_condition,
    cascade_partial_sum,
    optimize_sequence_constants,
    k43_event_constant,
    gap_free_epsilon,
    gap_free_tradeoff,
    gap_free_leading_constant,
    unit_epsilon_horizon,
    confidence_failure_probability,
    init_regret_bound,
    crossover_k,
)
from .table import BoundRow, bound_table

__all__ = [
    "constant_term",
    "thm_k43_uniform",
    "thm_k43_general",
    "thm_k_uniform",
    "thm_k_general",
    "thm_gap_free",
    "grid_bound",
    "bound_curve",
    "lower_bound_gap",
    "lower_bound_gap_free",
    "REFERENCE_ALPHA",
    "REFERENCE_BETA",
    "induced_d",
    "sequence_params",
    "appendix_constant",
    "cascade_condition",
    "cascade_partial_sum",
    "optimize_sequence_constants",
    "k43_event_constant",
    "gap_free_epsilon",
    "gap_free_tradeoff",
    "gap_free_leading_constant",
    "unit_epsilon_horizon",
    "confidence_failure_probability",
    "init_regret_bound",
    "crossover_k",
    "BoundRow",
    "bound_table",
]
