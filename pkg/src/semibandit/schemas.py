"""Pydantic schemas for experiment configuration files."""

from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .envs import EnvSpec
from .exceptions import ConfigError
from .harness import RunConfig
from .utils.config_loader import read_yaml_mapping

REQUIRED_FIELDS = {
    "kpath": ("L", "K", "delta"),
    "grid": ("m", "sigma"),
    "explicit": ("feasible_file", "means_file"),
}


class ExperimentConfig(BaseModel):
    """Schema of an experiment file for the ``run`` command."""

    model_config = ConfigDict(extra="forbid")

    env: Literal["kpath", "grid", "explicit"] = Field(..., description="Environment kind")
    L: Optional[int] = Field(None, ge=1, description="Number of items (kpath)")
    K: Optional[int] = Field(None, ge=1, description="Items per path (kpath)")
    delta: Optional[float] = Field(None, gt=0, description="Gap of suboptimal paths (kpath)")
    m: Optional[int] = Field(None, ge=1, description="Grid size (grid)")
    sigma: Optional[float] = Field(None, gt=0, lt=1, description="Edge mean gap (grid)")
    feasible_file: Optional[str] = Field(None, description="Feasible-set file (explicit)")
    means_file: Optional[str] = Field(None, description="Mean weight file (explicit)")
    horizon: int = Field(..., ge=1, description="Steps per run")
    runs: int = Field(1, ge=1, description="Independent runs")
    seed: int = Field(0, ge=0, description="Master seed")
    checkpoints: Union[Literal["geometric", "linear"], List[int]] = Field(
        "geometric", description="Schedule name or explicit step list"
    )
    checkpoint_count: int = Field(20, ge=1, description="Points of a named schedule")
    output_dir: str = Field("results", description="Directory for result files")
    jobs: int = Field(1, ge=1, description="Worker processes")

    @model_validator(mode="after")
    def check_env_fields(self) -> "ExperimentConfig":
        missing = [name for name in REQUIRED_FIELDS[self.env] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"env '{self.env}' requires: {', '.join(missing)}")
        return self

    def to_env_spec(self, base_dir: Optional[Path] = None) -> EnvSpec:
        """Environment description; relative file paths resolve against ``base_dir``."""
        def resolve(name: Optional[str]) -> Optional[str]:
            if name is None or base_dir is None or Path(name).is_absolute():
                return name
            return str(base_dir / name)

        return EnvSpec(
            kind=self.env,
            L=self.L,
            K=self.K,
            delta=self.delta,
            m=self.m,
            sigma=self.sigma,
            feasible_file=resolve(self.feasible_file),
            means_file=resolve(self.means_file),
        )

    def to_run_config(self, base_dir: Optional[Path] = None) -> RunConfig:
        if isinstance(self.checkpoints, list):
            return RunConfig(self.to_env_spec(base_dir), self.horizon, self.runs, self.seed,
                             checkpoints=self.checkpoints)
        return RunConfig(self.to_env_spec(base_dir), self.horizon, self.runs, self.seed,
                         schedule=self.checkpoints, checkpoint_count=self.checkpoint_count)


def load_experiment_config(path: Union[str, Path],
                           seed_override: Optional[int] = None) -> ExperimentConfig:
    """
    Read and validate an experiment file.

    Args:
        path: YAML file with flat ``key: value`` pairs
        seed_override: Replaces the file's seed when given

    Raises:
        ConfigError: On syntax or schema errors; the line of the offending
            key is reported when known
    """
    path = Path(path)
    data, lines = read_yaml_mapping(path)
    if seed_override is not None:
        data = {**data, "seed": seed_override}
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else None
        message = error["msg"] if key is None else f"{key}: {error['msg']}"
        raise ConfigError(message, lines.get(key) if key else None, str(path))
