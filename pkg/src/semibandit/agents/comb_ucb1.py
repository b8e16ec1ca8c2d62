"""
CombUCB1 for stochastic combinatorial semi-bandits.

The agent keeps, for every item, the number of observations T(e) and their
running mean. At step t it scores each item by an upper confidence bound,
hands the scores to the offline oracle and plays the returned solution. Init
observes every item once by repeatedly asking the oracle to cover items that
have not been seen yet.

The functions here never see the mean weights of the environment: regret
accounting is driven by a RegretReference built outside the agent.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ..envs import BaseEnvironment, regret_reference
from ..exceptions import (
    InvalidObservationError,
    NonCoveringOracleError,
    ParameterError,
    UninitializedAgentError,
)
from ..models import (
    AgentState,
    RegretReference,
    Solution,
    StepRecord,
    as_observation,
    return_value,
)
from ..oracles import BaseOracle

# Exploration constant inside the confidence radius.
RADIUS_SCALE = 1.5


def confidence_radius(t: float, s: int) -> float:
    """
    Return c_{t,s} = sqrt(1.5 ln t / s).

    Raises:
        ZeroDivisionError: If s is 0 (the item was never observed)
        ParameterError: If t < 1 or s < 0
    """
    if s == 0:
        raise ZeroDivisionError("Confidence radius needs at least one observation")
    if t < 1 or s < 0:
        raise ParameterError(f"Confidence radius needs t >= 1 and s >= 1, got t={t}, s={s}")
    return math.sqrt(RADIUS_SCALE * math.log(t) / s)


def compute_ucbs(state: AgentState) -> np.ndarray:
    """
    Return U_t(e) = mean(e) + c_{t-1, T(e)} for every item.

    UCBs are not clipped to [0, 1]; oracles accept any nonnegative weights.

    Raises:
        UninitializedAgentError: If an item has no observation or the state
            is still at step 1
    """
    if not state.is_initialized():
        unseen = np.flatnonzero(state.counts < 1).tolist()
        raise UninitializedAgentError(f"Items {unseen} have not been observed")
    if state.step < 2:
        raise UninitializedAgentError("UCBs are defined from step 2 on")
    radius = np.sqrt(RADIUS_SCALE * math.log(state.step - 1) / state.counts)
    return state.means + radius


def update(state: AgentState, chosen: Solution, observed) -> AgentState:
    """
    Credit the observed weights of the chosen items and advance the step.

    Args:
        state: Current statistics (left untouched)
        chosen: Solution played at this step
        observed: Weight vector of length L; only chosen entries are read

    Returns:
        New state with counts and running means updated for chosen items

    Raises:
        InvalidObservationError: If an observed entry of a chosen item lies
            outside [0, 1]
    """
    w = np.asarray(observed, dtype=float)
    idx = chosen.index
    values = w[idx]
    if np.any(~np.isfinite(values)) or np.any(values < 0.0) or np.any(values > 1.0):
        raise InvalidObservationError(
            f"Observed weights of {chosen} must lie in [0, 1], got {values.tolist()}"
        )
    counts = state.counts.copy()
    means = state.means.copy()
    old_counts = counts[idx]
    new_counts = old_counts + 1
    means[idx] = (old_counts * means[idx] + values) / new_counts
    counts[idx] = new_counts
    return AgentState(counts, means, state.step + 1)


def make_record(step: int, chosen: Solution, weights: np.ndarray,
                reference: RegretReference, **metadata) -> StepRecord:
    """Account one step against the optimal solution under the mean weights."""
    pseudo = reference.optimal_value - return_value(chosen, reference.mean_weights)
    realized_return = return_value(chosen, weights)
    realized = return_value(reference.optimal, weights) - realized_return
    return StepRecord(
        step=step,
        chosen=chosen,
        realized_return=realized_return,
        # exact ties with A* may differ by rounding
        pseudo_regret=max(pseudo, 0.0),
        realized_regret=realized,
        metadata=metadata,
    )


@dataclass
class InitResult:
    """
    Outcome of the initialization phase.

    Attributes:
        state: Statistics after Init (counts all 1 when complete)
        first_step: Step index t0 of the first UCB step
        oracle_calls: Number of oracle calls, one step each
        records: Per-step accounting, filled when a reference is given
        complete: False when ``max_steps`` stopped Init early
    """

    state: AgentState
    first_step: int
    oracle_calls: int
    records: List[StepRecord] = field(default_factory=list)
    complete: bool = True


def init_trace(oracle: BaseOracle, env: BaseEnvironment, rng: np.random.Generator,
               reference: Optional[RegretReference] = None,
               max_steps: Optional[int] = None) -> InitResult:
    """
    Observe every item at least once.

    Each iteration calls the oracle on the 0/1 vector of not-yet-observed
    items, samples the environment, overwrites the stored mean of every
    chosen item with its fresh observation and marks those items observed.
    Counts stay at 1 even for items observed more than once.

    Args:
        oracle: Offline oracle of the feasible set
        env: Environment to sample from
        rng: Generator of the current run
        reference: When given, each Init step is accounted into ``records``
        max_steps: Stop after this many steps even if items remain unseen

    Raises:
        NonCoveringOracleError: If a call covers no unseen item, or Init
            needs more than L calls
    """
    L = oracle.ground_size
    uncovered = np.ones(L)
    counts = np.zeros(L, dtype=np.int64)
    means = np.zeros(L)
    records: List[StepRecord] = []
    calls = 0
    complete = True
    while uncovered.any():
        if max_steps is not None and calls >= max_steps:
            complete = False
            break
        if calls >= L:
            raise NonCoveringOracleError(f"Init did not finish within {L} oracle calls")
        chosen = oracle.maximize(uncovered)
        idx = chosen.index
        if not uncovered[idx].any():
            raise NonCoveringOracleError(
                f"Oracle returned {chosen}, which covers no unobserved item"
            )
        weights = as_observation(env.sample(rng), L)
        calls += 1
        means[idx] = weights[idx]
        counts[idx] = 1
        uncovered[idx] = 0.0
        if reference is not None:
            records.append(make_record(calls, chosen, weights, reference, init=True))
    state = AgentState(counts, means, calls + 1)
    return InitResult(state, calls + 1, calls, records, complete)


def init(oracle: BaseOracle, env: BaseEnvironment,
         rng: np.random.Generator) -> Tuple[AgentState, int]:
    """
    Run Init and return the initialized state with the first UCB step t0.

    Terminates within L oracle calls; see ``init_trace``.
    """
    result = init_trace(oracle, env, rng)
    return result.state, result.first_step


def step(state: AgentState, oracle: BaseOracle, env: BaseEnvironment,
         rng: np.random.Generator,
         reference: Optional[RegretReference] = None) -> Tuple[AgentState, StepRecord]:
    """
    Play one CombUCB1 step.

    Computes the UCBs, asks the oracle for A_t, samples w_t, accounts the
    step and updates the statistics.

    Args:
        state: Initialized agent state
        oracle: Offline oracle
        env: Environment to sample from
        rng: Generator of the current run
        reference: Optimal solution under the mean weights; computed from
            the environment when omitted

    Returns:
        Tuple of (new state, record of this step)
    """
    if reference is None:
        reference = regret_reference(env, oracle)
    ucbs = compute_ucbs(state)
    chosen = oracle.maximize(ucbs)
    weights = as_observation(env.sample(rng), oracle.ground_size)
    record = make_record(state.step, chosen, weights, reference)
    return update(state, chosen, weights), record
