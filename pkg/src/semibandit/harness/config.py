"""Run configuration for seeded experiments."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from ..envs import EnvSpec
from ..exceptions import ConfigError
from ..utils.validators import validate_checkpoints
from .checkpoints import DEFAULT_CHECKPOINT_COUNT, geometric_checkpoints, linear_checkpoints

SCHEDULES = ("geometric", "linear")


@dataclass(frozen=True)
class RunConfig:
    """
    Everything needed to reproduce a set of runs.

    Attributes:
        env: Environment description
        horizon: Number of steps n per run
        num_runs: Independent runs
        master_seed: Seed from which every run seed is derived
        checkpoints: Explicit checkpoint list; overrides ``schedule``
        schedule: "geometric" or "linear" when no explicit list is given
        checkpoint_count: Number of scheduled checkpoints
    """

    env: EnvSpec
    horizon: int
    num_runs: int = 1
    master_seed: int = 0
    checkpoints: Optional[Sequence[int]] = None
    schedule: str = "geometric"
    checkpoint_count: int = DEFAULT_CHECKPOINT_COUNT
    _resolved: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if int(self.horizon) != self.horizon or self.horizon < 1:
            raise ConfigError(f"horizon must be a positive integer, got {self.horizon}")
        if self.num_runs < 1:
            raise ConfigError(f"runs must be >= 1, got {self.num_runs}")
        if self.master_seed < 0:
            raise ConfigError(f"seed must be nonnegative, got {self.master_seed}")
        if self.schedule not in SCHEDULES:
            raise ConfigError(f"Unknown checkpoint schedule {self.schedule!r}")
        object.__setattr__(self, "horizon", int(self.horizon))
        if self.checkpoints is not None:
            is_valid, errors = validate_checkpoints(self.checkpoints, self.horizon)
            if not is_valid:
                raise ConfigError("; ".join(errors))
            resolved = tuple(int(c) for c in self.checkpoints)
            object.__setattr__(self, "checkpoints", resolved)
        elif self.schedule == "linear":
            resolved = tuple(linear_checkpoints(self.horizon, self.checkpoint_count))
        else:
            resolved = tuple(geometric_checkpoints(self.horizon, self.checkpoint_count))
        object.__setattr__(self, "_resolved", resolved)

    def resolved_checkpoints(self) -> List[int]:
        return list(self._resolved)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "env": self.env.to_dict(),
            "horizon": self.horizon,
            "runs": self.num_runs,
            "seed": self.master_seed,
            "checkpoints": self.resolved_checkpoints(),
        }
