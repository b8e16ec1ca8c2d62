"""Test configuration and fixtures."""

import logging
from pathlib import Path
from typing import List

import numpy as np
import pytest

from semibandit.envs import BaseEnvironment, GridEnv, IndependentBernoulliEnv, KPathEnv
from semibandit.models import Solution
from semibandit.oracles import ExhaustiveOracle, ExplicitFeasibleSet, GridOracle, KPathOracle
from semibandit.utils.logger import ROOT_LOGGER

DATA_DIR = Path(__file__).parent.parent / "data"


class ScriptedEnv(BaseEnvironment):
    """Environment that replays a fixed list of weight vectors."""

    def __init__(self, samples: List[List[float]], means: List[float]):
        super().__init__(len(means))
        self._samples = [np.asarray(s, dtype=float) for s in samples]
        self._means = np.asarray(means, dtype=float)
        self.calls = 0

    @property
    def mean_weights(self):
        return self._means.copy()

    def sample(self, rng):
        value = self._samples[self.calls % len(self._samples)]
        self.calls += 1
        return value.copy()


@pytest.fixture
def rng() -> np.random.Generator:
    """Fixture providing a seeded generator."""
    return np.random.default_rng(12345)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def kpath_problem():
    """K-path instance with L=4, K=2 and delta=0.5."""
    return KPathEnv(4, 2, 0.5), KPathOracle(4, 2)


@pytest.fixture
def grid_problem():
    """Grid instance with m=1 and sigma=0.2."""
    env = GridEnv(1, 0.2)
    return env, GridOracle(env.grid)


@pytest.fixture
def two_of_four() -> ExplicitFeasibleSet:
    """All 2-item subsets of 4 items."""
    solutions = [Solution((i, j)) for i in range(4) for j in range(i + 1, 4)]
    return ExplicitFeasibleSet(solutions, L=4, K=2)


@pytest.fixture
def two_of_four_problem(two_of_four):
    env = IndependentBernoulliEnv([0.1, 0.9, 0.8, 0.2])
    return env, ExhaustiveOracle(two_of_four)


@pytest.fixture
def scripted_env_factory():
    """Build environments that replay given samples."""
    return ScriptedEnv


@pytest.fixture
def write_config(tmp_path):
    """Write an experiment YAML file and return its path."""
    def _write(text: str, name: str = "experiment.yaml") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write


@pytest.fixture(autouse=True)
def reset_package_logger():
    """Drop handlers the CLI attaches to the package logger."""
    yield
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
