"""Tests for experiment configuration files."""

from pathlib import Path

import pytest

from semibandit.exceptions import ConfigError
from semibandit.schemas import ExperimentConfig, load_experiment_config

CONFIG_DIR = Path(__file__).parent.parent.parent / "config"

GRID_CONFIG = """\
env: grid
m: 2
sigma: 0.4
horizon: 1000
runs: 3
seed: 11
"""


def test_load_grid_config(write_config):
    config = load_experiment_config(write_config(GRID_CONFIG))
    assert config.env == "grid"
    assert config.checkpoints == "geometric"
    run_config = config.to_run_config()
    assert run_config.env.label() == "grid(m=2, sigma=0.4)"
    assert run_config.num_runs == 3
    assert run_config.master_seed == 11
    assert run_config.resolved_checkpoints()[-1] == 1000


def test_seed_override(write_config):
    config = load_experiment_config(write_config(GRID_CONFIG), seed_override=99)
    assert config.seed == 99


def test_explicit_checkpoints_and_paths(tmp_path):
    config = ExperimentConfig(env="explicit", feasible_file="../data/f.txt",
                              means_file="/abs/m.txt", horizon=100, checkpoints=[10, 100])
    spec = config.to_env_spec(tmp_path)
    assert spec.feasible_file == str(tmp_path / "../data/f.txt")
    assert spec.means_file == "/abs/m.txt"
    assert config.to_run_config(tmp_path).resolved_checkpoints() == [10, 100]


def test_unknown_key_reports_line(write_config):
    """Schema errors name the key and its line."""
    with pytest.raises(ConfigError) as exc_info:
        load_experiment_config(write_config(GRID_CONFIG + "colour: blue\n"))
    assert exc_info.value.line == 7
    assert "colour" in str(exc_info.value)


def test_invalid_values_report_line(write_config):
    with pytest.raises(ConfigError) as exc_info:
        load_experiment_config(write_config(GRID_CONFIG.replace("horizon: 1000", "horizon: 0")))
    assert exc_info.value.line == 4

    with pytest.raises(ConfigError) as exc_info:
        load_experiment_config(write_config(GRID_CONFIG.replace("sigma: 0.4", "sigma: 1.0")))
    assert exc_info.value.line == 3


def test_missing_env_fields(write_config):
    with pytest.raises(ConfigError) as exc_info:
        load_experiment_config(write_config("env: grid\nm: 2\nhorizon: 10\n"))
    assert "sigma" in str(exc_info.value)


@pytest.mark.parametrize("name", ["grid_experiment", "kpath_experiment", "explicit_experiment"])
def test_shipped_configs_are_valid(name):
    path = CONFIG_DIR / f"{name}.yaml"
    config = load_experiment_config(path)
    run_config = config.to_run_config(path.parent)
    if config.env == "explicit":
        assert Path(run_config.env.feasible_file).exists()
        assert Path(run_config.env.means_file).exists()
