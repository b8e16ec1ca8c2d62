"""Oracles package: offline solvers for argmax_{A in Theta} f(A, w)."""

from .base import BaseOracle
from .explicit import ExplicitFeasibleSet, ExhaustiveOracle, exhaustive_maximize, load_feasible_set
from .kpath import KPathOracle, kpath_maximize, check_kpath_instance
from .grid import (
    GridSpec,
    GridOracle,
    grid_maximize,
    grid_best_through_edge,
    grid_enumerate_paths,
)

__all__ = [
    "BaseOracle",
    "ExplicitFeasibleSet",
    "ExhaustiveOracle",
    "exhaustive_maximize",
    "load_feasible_set",
    "KPathOracle",
    "kpath_maximize",
    "check_kpath_instance",
    "GridSpec",
    "GridOracle",
    "grid_maximize",
    "grid_best_through_edge",
    "grid_enumerate_paths",
]
