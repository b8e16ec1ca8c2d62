"""
Combinatorial semi-bandits with CombUCB1.

Offline oracles for explicit, K-path and grid feasible sets; stochastic
environments; the CombUCB1 learner; closed-form regret bounds; and a seeded
experiment harness with a command-line front end.
"""

__version__ = "0.1.0"

from .models import Solution, AgentState, StepRecord, return_value
from .oracles import BaseOracle, ExhaustiveOracle, KPathOracle, GridOracle, GridSpec
from .envs import BaseEnvironment, KPathEnv, GridEnv, IndependentBernoulliEnv, gap_summary
from .agents import confidence_radius, compute_ucbs, update, init, step

__all__ = [
    "__version__",
    "Solution",
    "AgentState",
    "StepRecord",
    "return_value",
    "BaseOracle",
    "ExhaustiveOracle",
    "KPathOracle",
    "GridOracle",
    "GridSpec",
    "BaseEnvironment",
    "KPathEnv",
    "GridEnv",
    "IndependentBernoulliEnv",
    "gap_summary",
    "confidence_radius",
    "compute_ucbs",
    "update",
    "init",
    "step",
]
