"""Tests for the command-line interface."""

import json
import math

import pytest
from click.testing import CliRunner

from semibandit import __version__
from semibandit.cli import cli

SMALL_GRID = """\
env: grid
m: 1
sigma: 0.4
horizon: 300
runs: 2
seed: 3
"""


@pytest.fixture
def runner():
    return CliRunner()


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_run_writes_results(runner, write_config, tmp_path):
    """The run command writes traces, aggregates and a summary."""
    config = write_config(SMALL_GRID)
    out = tmp_path / "out"
    result = runner.invoke(cli, ["run", str(config), "-o", str(out), "-q"])
    assert result.exit_code == 0, result.output
    assert "grid(m=1, sigma=0.4)" in result.output

    traces = (out / "traces.csv").read_text(encoding="utf-8").splitlines()
    assert traces[0] == "run,checkpoint,pseudo_regret,realized_regret"
    assert {line.split(",")[0] for line in traces[1:]} == {"0", "1"}
    aggregate = (out / "aggregate.csv").read_text(encoding="utf-8").splitlines()
    assert aggregate[0] == "checkpoint,mean,std,bound,ratio"
    assert aggregate[-1].startswith("300,")

    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["config"]["seed"] == 3
    assert summary["gaps"]["optimal"] == [1, 2]


def test_run_is_byte_reproducible(runner, write_config, tmp_path):
    config = write_config(SMALL_GRID)
    for name in ("a", "b"):
        result = runner.invoke(cli, ["run", str(config), "-o", str(tmp_path / name), "-q"])
        assert result.exit_code == 0, result.output
    for filename in ("traces.csv", "aggregate.csv"):
        assert (tmp_path / "a" / filename).read_bytes() == (tmp_path / "b" / filename).read_bytes()


def test_seed_environment_variable(runner, write_config, tmp_path):
    config = write_config(SMALL_GRID)
    out = tmp_path / "out"
    result = runner.invoke(cli, ["run", str(config), "-o", str(out), "-q"],
                           env={"SEMIBANDIT_SEED": "42"})
    assert result.exit_code == 0, result.output
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["config"]["seed"] == 42

    result = runner.invoke(cli, ["run", str(config), "-o", str(out), "-q"],
                           env={"SEMIBANDIT_SEED": "abc"})
    assert result.exit_code == 2


@pytest.mark.parametrize("text,fragment", [
    ("env: grid\nm: 2\nhorizon: 100\n", "sigma"),
    (SMALL_GRID.replace("horizon: 300", "horizon: 0"), ":4:"),
    (SMALL_GRID + "colour: blue\n", ":7:"),
    ("env: grid\nm: [2\n", "Invalid YAML"),
    ("env: kpath\nL: 5\nK: 2\ndelta: 0.2\nhorizon: 10\n", "divisible"),
])
def test_run_config_errors_exit_2(runner, write_config, tmp_path, text, fragment):
    result = runner.invoke(cli, ["run", str(write_config(text)), "-o", str(tmp_path / "out")])
    assert result.exit_code == 2
    assert fragment in result.output
    assert not (tmp_path / "out" / "traces.csv").exists()


def test_run_missing_file(runner, tmp_path):
    result = runner.invoke(cli, ["run", str(tmp_path / "missing.yaml")])
    assert result.exit_code == 2


def test_bounds_text(runner):
    result = runner.invoke(cli, ["bounds", "--K", "2", "--L", "4", "--n", repr(math.e),
                                 "--delta", "0.5"])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert "Theorem 4: 4306.32" in lines
    assert "Theorem 2: 1001.94" in lines
    assert lines[-1].startswith("Proposition 2:")


def test_bounds_csv_with_gaps_file(runner, tmp_path):
    gaps = tmp_path / "gaps.txt"
    gaps.write_text("0.5 0.5\n0.25\n", encoding="utf-8")
    result = runner.invoke(cli, ["bounds", "--K", "2", "--L", "4", "--n", "1000",
                                 "--gaps-file", str(gaps), "--format", "csv"])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == "label,kind,value"
    assert [line.split(",")[0] for line in lines[1:]] == ["Theorem 3", "Theorem 5", "Theorem 6",
                                                         "Proposition 2"]


def test_bounds_gaps_file_bad_token(runner, tmp_path):
    gaps = tmp_path / "gaps.txt"
    gaps.write_text("0.5 0.5\n0.25 n/a\n", encoding="utf-8")
    result = runner.invoke(cli, ["bounds", "--K", "2", "--L", "4", "--n", "1000",
                                 "--gaps-file", str(gaps)])
    assert result.exit_code == 2
    assert "gaps.txt:2:" in result.output


def test_bounds_errors(runner, tmp_path):
    result = runner.invoke(cli, ["bounds", "--K", "2", "--L", "4", "--n", "100"])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["bounds", "--K", "5", "--L", "4", "--n", "100", "--delta", "1"])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["bounds", "--K", "2", "--L", "4", "--n", "100",
                                 "--gaps-file", str(tmp_path / "none.txt")])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["bounds", "--K", "2", "--n", "100", "--delta", "1"])
    assert result.exit_code == 2


def test_sweep_grid(runner, tmp_path):
    result = runner.invoke(cli, ["sweep-grid", "--m", "1", "--m", "2", "--sigma", "0.4",
                                 "-n", "100", "-r", "1", "-o", str(tmp_path), "-q"])
    assert result.exit_code == 0, result.output
    lines = (tmp_path / "sweep_grid.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "m,sigma,L,final_mean_regret,final_std,bound"
    assert len(lines) == 3


def test_sweep_kpath(runner, tmp_path):
    result = runner.invoke(cli, ["sweep-kpath", "--L", "4", "--K", "2", "--delta", "0.5",
                                 "-n", "100", "-r", "2", "-o", str(tmp_path), "-q"])
    assert result.exit_code == 0, result.output
    lines = (tmp_path / "sweep_kpath.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "L,K,delta,final_mean_regret,final_std,bound"
    assert lines[1].startswith("4,2,0.5,")


def test_sweep_invalid_instance(runner, tmp_path):
    result = runner.invoke(cli, ["sweep-grid", "--m", "1", "--sigma", "1.5",
                                 "-n", "100", "-r", "1", "-o", str(tmp_path), "-q"])
    assert result.exit_code == 2


def test_verify(runner):
    result = runner.invoke(cli, ["verify"])
    assert result.exit_code == 0, result.output
    assert "8/8 checks passed" in result.output
    assert "[FAIL]" not in result.output
