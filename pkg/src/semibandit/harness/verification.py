"""Fast self-checks of the oracles, constants and Init."""

import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

from ..agents import init_trace
from ..bounds import (
    REFERENCE_ALPHA,
    REFERENCE_BETA,
    appendix_constant,
    cascade_partial_sum,
    crossover_k,
    gap_free_leading_constant,
    k43_event_constant,
    sequence_params,
)
from ..envs import GridEnv, KPathEnv
from ..models import return_value
from ..oracles import GridOracle, GridSpec, KPathOracle, grid_enumerate_paths
from ..utils.logger import get_logger
from .checkpoints import make_rng
from .coverage import confidence_coverage

logger = get_logger(__name__)

COVERAGE_PAIRS = [(t, s) for t in (10, 100) for s in (1, 5, 20)]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    name: str
    passed: bool
    detail: str

    def format(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def check_grid_oracle(rng: np.random.Generator, trials: int = 1000,
                      sizes: Tuple[int, ...] = (1, 2, 3)) -> CheckResult:
    mismatches = 0
    for m in sizes:
        grid = GridSpec(m)
        oracle = GridOracle(grid)
        paths = grid_enumerate_paths(grid)
        for _ in range(trials):
            w = rng.random(grid.num_items)
            best = max(return_value(p, w) for p in paths)
            if not math.isclose(oracle.optimal_value(w), best, rel_tol=0, abs_tol=1e-12):
                mismatches += 1
    total = trials * len(sizes)
    return CheckResult("grid oracle vs enumeration", mismatches == 0,
                       f"{mismatches} mismatches in {total} trials")


def check_appendix_constant() -> CheckResult:
    value = appendix_constant(REFERENCE_ALPHA, REFERENCE_BETA)
    return CheckResult("sequence constant", 265.0 < value < 267.0, f"{value:.4f} in (265, 267)")


def check_cascade_sum() -> CheckResult:
    total = cascade_partial_sum(sequence_params(REFERENCE_ALPHA, REFERENCE_BETA), terms=200)
    return CheckResult("cascade partial sum", total <= 1.0 + 1e-9, f"{total:.12f} <= 1 + 1e-9")


def check_gap_free_constant() -> CheckResult:
    value = gap_free_leading_constant()
    return CheckResult("gap-free constant", value < 47.0, f"2 sqrt(534) = {value:.4f} < 47")


def check_k43_constant() -> CheckResult:
    worst = max(abs(k43_event_constant(4.0, K ** (2.0 / 3.0), K) - 48.0 * K ** (4.0 / 3.0))
                / (48.0 * K ** (4.0 / 3.0)) for K in range(1, 11))
    return CheckResult("K^(4/3) event constant", worst < 1e-12,
                       f"max relative error {worst:.2e} for K = 1..10")


def check_crossover() -> CheckResult:
    value = crossover_k()
    return CheckResult("bound crossover", 172.0 < value < 173.0, f"(534/96)^3 = {value:.2f}")


def check_coverage(rng: np.random.Generator, num_samples: int) -> CheckResult:
    failed = []
    for t, s in COVERAGE_PAIRS:
        result = confidence_coverage(t, s, num_samples, rng)
        if not result.passed:
            failed.append(f"(t={t}, s={s}): {result.empirical:.2e} > {result.threshold:.2e}")
    detail = "; ".join(failed) if failed else f"{len(COVERAGE_PAIRS)} pairs, {num_samples} samples"
    return CheckResult("confidence coverage", not failed, detail)


def check_init_contract(rng: np.random.Generator) -> CheckResult:
    problems = [(KPathEnv(L, 2, 0.5), KPathOracle(L, 2)) for L in (4, 8, 12)]
    for m in (1, 2, 3):
        env = GridEnv(m, 0.5)
        problems.append((env, GridOracle(env.grid)))
    failures = []
    for env, oracle in problems:
        result = init_trace(oracle, env, rng)
        if result.oracle_calls > oracle.L or not np.all(result.state.counts == 1):
            failures.append(repr(env))
    detail = "; ".join(failures) if failures else f"{len(problems)} instances within L calls"
    return CheckResult("Init contract", not failures, detail)


def run_verification(fast: bool = True, seed: int = 0) -> List[CheckResult]:
    """
    Run all self-checks.

    Args:
        fast: Use 10^5 instead of 10^6 Monte Carlo samples for coverage
        seed: Seed of the checks' random stream

    Returns:
        One result per check, in a fixed order
    """
    rng = make_rng(seed)
    checks: List[Callable[[], CheckResult]] = [
        lambda: check_grid_oracle(rng),
        check_appendix_constant,
        check_cascade_sum,
        check_gap_free_constant,
        check_k43_constant,
        check_crossover,
        lambda: check_coverage(rng, 10 ** 5 if fast else 10 ** 6),
        lambda: check_init_contract(rng),
    ]
    results = []
    for check in checks:
        result = check()
        logger.debug(result.format())
        results.append(result)
    return results
