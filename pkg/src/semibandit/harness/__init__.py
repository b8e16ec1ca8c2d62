"""Harness package: seeded runs, aggregation, bound comparison and self-checks."""

from .checkpoints import (
    DEFAULT_CHECKPOINT_COUNT,
    geometric_checkpoints,
    linear_checkpoints,
    derive_run_seed,
    make_rng,
)
from .config import RunConfig
from .runner import run_episode, run_many, aggregate
from .comparison import compare_to_bound, instance_bound_curve
from .coverage import CoverageResult, confidence_coverage, coverage_threshold
from .sweeps import sweep_grid, sweep_kpath, GRID_COLUMNS, KPATH_COLUMNS
from .verification import CheckResult, run_verification

__all__ = [
    "DEFAULT_CHECKPOINT_COUNT",
    "geometric_checkpoints",
    "linear_checkpoints",
    "derive_run_seed",
    "make_rng",
    "RunConfig",
    "run_episode",
    "run_many",
    "aggregate",
    "compare_to_bound",
    "instance_bound_curve",
    "CoverageResult",
    "confidence_coverage",
    "coverage_threshold",
    "sweep_grid",
    "sweep_kpath",
    "GRID_COLUMNS",
    "KPATH_COLUMNS",
    "CheckResult",
    "run_verification",
]
