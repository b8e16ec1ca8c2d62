"""Environments package: stochastic weight sources and their gap structure."""

from .base import BaseEnvironment, sample
from .bernoulli import IndependentBernoulliEnv
from .kpath import KPathEnv
from .grid import GridEnv
from .gaps import gap_summary, regret_reference, UNIQUENESS_TOLERANCE
from .factory import EnvSpec, ENV_KINDS, build_problem, load_means

__all__ = [
    "BaseEnvironment",
    "IndependentBernoulliEnv",
    "KPathEnv",
    "GridEnv",
    "gap_summary",
    "regret_reference",
    "UNIQUENESS_TOLERANCE",
    "EnvSpec",
    "ENV_KINDS",
    "build_problem",
    "load_means",
    "sample",
]
