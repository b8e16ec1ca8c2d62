"""Optimal solution and per-item minimum gaps of an instance."""

from ..exceptions import DimensionError
from ..models import GapSummary, RegretReference, return_value
from ..oracles import BaseOracle
from ..utils.logger import get_logger
from .base import BaseEnvironment

logger = get_logger(__name__)

# Values closer than this to f(A*, w_bar) count as ties with the optimum.
UNIQUENESS_TOLERANCE = 1e-12


def regret_reference(env: BaseEnvironment, oracle: BaseOracle) -> RegretReference:
    """
    Solve the instance under its mean weights once.

    The returned reference is what step accounting compares against; it is
    built by the harness and never handed to the agent.
    """
    _check_sizes(env, oracle)
    w_bar = env.mean_weights
    optimal = oracle.maximize(w_bar)
    return RegretReference(optimal, return_value(optimal, w_bar), w_bar)


def gap_summary(env: BaseEnvironment, oracle: BaseOracle,
                tolerance: float = UNIQUENESS_TOLERANCE) -> GapSummary:
    """
    Compute A*, f(A*, w_bar) and Delta_{e,min} for every suboptimal item.

    Environments with a closed form for their gaps (the K-path construction)
    supply it; otherwise the oracle computes each gap as the optimum minus
    the best value of a feasible solution containing the item.

    A second solution reaching the optimal value does not raise: the summary
    is marked non-unique and a warning is recorded and logged. Items whose
    only competing solutions tie with the optimum are left out.
    """
    reference = regret_reference(env, oracle)
    analytic = env.analytic_min_gaps()
    if analytic is not None:
        gaps, tie_found = dict(analytic), False
    else:
        gaps, tie_found = oracle.min_gaps(reference.mean_weights, reference.optimal, tolerance)

    summary = GapSummary(
        optimal_value=reference.optimal_value,
        optimal=reference.optimal,
        per_item_min_gap=gaps,
        unique_optimum=not tie_found,
    )
    if tie_found:
        message = (f"Optimal solution is not unique within {tolerance:g}; "
                   f"regret is measured against {reference.optimal}")
        summary.warnings.append(message)
        logger.warning(message)
    return summary


def _check_sizes(env: BaseEnvironment, oracle: BaseOracle) -> None:
    if env.num_items != oracle.ground_size:
        raise DimensionError(
            f"Environment has {env.num_items} items but the oracle expects {oracle.ground_size}"
        )
