"""Models package for semi-bandit domain types."""

from .solution import ItemId, WeightVector, Solution, return_value, as_weights, as_observation
from .agent_state import AgentState, StepRecord
from .gaps import GapSummary, RegretReference
from .params import ProblemParams, SequenceParams
from .trace import RegretTrace, AggregateResult, BoundComparison

__all__ = [
    "ItemId",
    "WeightVector",
    "Solution",
    "return_value",
    "as_weights",
    "as_observation",
    "AgentState",
    "StepRecord",
    "GapSummary",
    "RegretReference",
    "ProblemParams",
    "SequenceParams",
    "RegretTrace",
    "AggregateResult",
    "BoundComparison",
]
