"""Build (environment, oracle) pairs from a declarative description."""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..exceptions import ConfigError, InvalidInstanceError
from ..oracles import BaseOracle, ExhaustiveOracle, GridOracle, KPathOracle, load_feasible_set
from ..utils.config_loader import read_number_list
from .base import BaseEnvironment
from .bernoulli import IndependentBernoulliEnv
from .grid import GridEnv
from .kpath import KPathEnv

ENV_KINDS = ("kpath", "grid", "explicit")


@dataclass(frozen=True)
class EnvSpec:
    """
    Environment kind plus the parameters that kind needs.

    Attributes:
        kind: One of "kpath", "grid", "explicit"
        L: Number of items (kpath)
        K: Items per path (kpath)
        delta: Gap of the suboptimal paths (kpath)
        m: Grid size (grid)
        sigma: Mean gap of grid edges (grid)
        feasible_file: Feasible-set file (explicit)
        means_file: Whitespace-separated mean weights (explicit)
    """

    kind: str
    L: Optional[int] = None
    K: Optional[int] = None
    delta: Optional[float] = None
    m: Optional[int] = None
    sigma: Optional[float] = None
    feasible_file: Optional[str] = None
    means_file: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ENV_KINDS:
            raise InvalidInstanceError(
                f"Unknown environment kind {self.kind!r}; expected one of {', '.join(ENV_KINDS)}"
            )

    @classmethod
    def kpath(cls, L: int, K: int, delta: float) -> "EnvSpec":
        return cls("kpath", L=L, K=K, delta=delta)

    @classmethod
    def grid(cls, m: int, sigma: float) -> "EnvSpec":
        return cls("grid", m=m, sigma=sigma)

    def to_dict(self) -> Dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def label(self) -> str:
        if self.kind == "kpath":
            return f"kpath(L={self.L}, K={self.K}, delta={self.delta})"
        if self.kind == "grid":
            return f"grid(m={self.m}, sigma={self.sigma})"
        return f"explicit({self.feasible_file})"


def load_means(path, size: int) -> np.ndarray:
    """
    Read a mean weight vector of length ``size``.

    Raises:
        ConfigError: If the file is missing, unparsable or of the wrong length
    """
    means = read_number_list(path, "mean weights")
    if means.shape[0] != size:
        raise ConfigError(f"Expected {size} mean weights, found {means.shape[0]}",
                          source=str(path))
    return means


def _require(spec: EnvSpec, *names: str) -> None:
    missing = [name for name in names if getattr(spec, name) is None]
    if missing:
        raise ConfigError(f"Environment {spec.kind!r} requires: {', '.join(missing)}")


def build_problem(spec: EnvSpec) -> Tuple[BaseEnvironment, BaseOracle]:
    """
    Create the environment and its matching oracle.

    Raises:
        ConfigError: If a parameter the kind needs is missing, or an input
            file cannot be read
        InvalidInstanceError: If parameters violate the construction
    """
    if spec.kind == "kpath":
        _require(spec, "L", "K", "delta")
        return KPathEnv(spec.L, spec.K, spec.delta), KPathOracle(spec.L, spec.K)
    if spec.kind == "grid":
        _require(spec, "m", "sigma")
        env = GridEnv(spec.m, spec.sigma)
        return env, GridOracle(env.grid)
    _require(spec, "feasible_file", "means_file")
    feasible = load_feasible_set(spec.feasible_file)
    try:
        env = IndependentBernoulliEnv(load_means(spec.means_file, feasible.L))
    except InvalidInstanceError as e:
        raise ConfigError(str(e), source=str(spec.means_file))
    return env, ExhaustiveOracle(feasible)
