"""Command-line entry point for semi-bandit experiments."""

import functools
import os
import sys
from pathlib import Path
from typing import Optional

import click
import pandas as pd

from .. import __version__
from ..bounds import bound_table
from ..envs import build_problem, gap_summary
from ..exceptions import ConfigError, InvalidInstanceError, ParameterError, SemiBanditError
from ..harness import (
    compare_to_bound,
    instance_bound_curve,
    run_many,
    run_verification,
    sweep_grid,
    sweep_kpath,
)
from ..models import ProblemParams
from ..schemas import load_experiment_config
from ..utils.config_loader import get_config_loader, read_number_list
from ..utils.exporters import FLOAT_FORMAT, ResultExporter
from ..utils.logger import get_logger, setup_logger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

SEED_ENV_VAR = "SEMIBANDIT_SEED"

logger = get_logger(__name__)


def default(key_path: str, fallback):
    """Value from config/default.yaml, or ``fallback`` when unavailable."""
    return get_config_loader().get_config_value("default", key_path, fallback)


def seed_from_env() -> Optional[int]:
    """Seed override from SEMIBANDIT_SEED, if set."""
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        seed = int(raw)
    except ValueError:
        raise ConfigError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")
    if seed < 0:
        raise ConfigError(f"{SEED_ENV_VAR} must be nonnegative, got {seed}")
    return seed


def handle_errors(func):
    """Map toolkit errors to the CLI's exit codes."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ConfigError, ParameterError, InvalidInstanceError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except (SemiBanditError, OSError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_FAILURE)
    return wrapper


def configure_logging(log_level: Optional[str], log_file: Optional[str]) -> None:
    level = log_level or default("logging.level", "WARNING")
    setup_logger(level=level, log_file=log_file or default("logging.file", None))


def run_options(func):
    """Options shared by the commands that run experiments."""
    options = [
        click.option("--output-dir", "-o", type=click.Path(file_okay=False),
                     help="Directory for result files"),
        click.option("--jobs", "-j", type=click.IntRange(min=1),
                     help="Worker processes for independent runs"),
        click.option("--quiet", "-q", is_flag=True, help="Hide the progress bar"),
        click.option("--log-level", type=click.Choice(
            ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
            help="Log level (default from config/default.yaml)"),
        click.option("--log-file", type=click.Path(dir_okay=False), help="Also log to this file"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
@click.version_option(__version__, prog_name="semibandit")
def cli():
    """CombUCB1 experiments on stochastic combinatorial semi-bandits."""


@cli.command("run")
@click.argument("config_file", type=click.Path(dir_okay=False))
@run_options
@handle_errors
def cmd_run(config_file, output_dir, jobs, quiet, log_level, log_file):
    """Run the experiment described by CONFIG_FILE and write its CSV files."""
    configure_logging(log_level, log_file)
    config = load_experiment_config(config_file, seed_override=seed_from_env())
    run_config = config.to_run_config(Path(config_file).resolve().parent)

    env, oracle = build_problem(run_config.env)
    summary = gap_summary(env, oracle)
    result = run_many(run_config, jobs=jobs or config.jobs, progress=not quiet)
    comparison = compare_to_bound(result, instance_bound_curve(env, oracle, summary))

    exporter = ResultExporter(output_dir or config.output_dir)
    exporter.write_traces(result)
    exporter.write_aggregate(result, comparison)
    exporter.write_json({
        "config": run_config.to_dict(),
        "instance": {**oracle.describe(), **env.describe()},
        "gaps": summary.to_dict(),
        "truncated_runs": result.metadata.get("truncated_runs", 0),
    }, "summary.json")

    for warning in summary.warnings:
        click.echo(f"Warning: {warning}", err=True)
    click.echo(
        f"{run_config.env.label()}: mean pseudo-regret {result.final_mean:.3f} "
        f"(std {result.final_std:.3f}) over {result.num_runs} run(s) at n={run_config.horizon}; "
        f"bound {comparison.bound[-1]:.1f}, ratio {comparison.ratios[-1]:.4f}"
    )


@cli.command("sweep-grid")
@click.option("--m", "m_values", type=click.IntRange(min=1), multiple=True,
              help="Grid size; repeat for several (default 2, 4, 6)")
@click.option("--sigma", "sigma_values", type=float, multiple=True,
              help="Edge mean gap; repeat for several (default 0.2, 0.4, 0.8)")
@click.option("--horizon", "-n", type=click.IntRange(min=1), help="Steps per run")
@click.option("--runs", "-r", type=click.IntRange(min=1), help="Runs per cell")
@click.option("--seed", "-s", type=click.IntRange(min=0), help="Master seed")
@run_options
@handle_errors
def cmd_sweep_grid(m_values, sigma_values, horizon, runs, seed, output_dir, jobs, quiet,
                   log_level, log_file):
    """Run CombUCB1 on every (m, sigma) grid problem and tabulate final regret."""
    configure_logging(log_level, log_file)
    env_seed = seed_from_env()
    frame = sweep_grid(
        m_values=list(m_values) or default("sweep.grid.m_values", [2, 4, 6]),
        sigma_values=list(sigma_values) or default("sweep.grid.sigma_values", [0.2, 0.4, 0.8]),
        horizon=horizon or default("experiment.horizon", 100000),
        runs=runs or default("experiment.runs", 10),
        seed=env_seed if env_seed is not None else
        (seed if seed is not None else default("experiment.seed", 0)),
        jobs=jobs or default("experiment.jobs", 1),
        progress=not quiet,
    )
    ResultExporter(output_dir or default("output.directory", "results")).write_frame(
        frame, "sweep_grid.csv")
    click.echo(frame.to_string(index=False))


@cli.command("sweep-kpath")
@click.option("--L", "L_values", type=click.IntRange(min=1), multiple=True,
              help="Number of items; repeat for several (default 8)")
@click.option("--K", "K", type=click.IntRange(min=1), help="Items per path (default 2)")
@click.option("--delta", "delta_values", type=float, multiple=True,
              help="Gap; repeat for several (default 0.2)")
@click.option("--horizon", "-n", type=click.IntRange(min=1), help="Steps per run")
@click.option("--runs", "-r", type=click.IntRange(min=1), help="Runs per cell")
@click.option("--seed", "-s", type=click.IntRange(min=0), help="Master seed")
@run_options
@handle_errors
def cmd_sweep_kpath(L_values, K, delta_values, horizon, runs, seed, output_dir, jobs, quiet,
                    log_level, log_file):
    """Run CombUCB1 on every (L, delta) K-path problem and tabulate final regret."""
    configure_logging(log_level, log_file)
    env_seed = seed_from_env()
    frame = sweep_kpath(
        L_values=list(L_values) or default("sweep.kpath.L_values", [8]),
        K=K or default("sweep.kpath.K", 2),
        delta_values=list(delta_values) or default("sweep.kpath.delta_values", [0.2]),
        horizon=horizon or default("experiment.horizon", 100000),
        runs=runs or default("experiment.runs", 10),
        seed=env_seed if env_seed is not None else
        (seed if seed is not None else default("experiment.seed", 0)),
        jobs=jobs or default("experiment.jobs", 1),
        progress=not quiet,
    )
    ResultExporter(output_dir or default("output.directory", "results")).write_frame(
        frame, "sweep_kpath.csv")
    click.echo(frame.to_string(index=False))


@cli.command("bounds")
@click.option("--K", "K", type=click.IntRange(min=1), required=True, help="Solution size")
@click.option("--L", "L", type=click.IntRange(min=1), required=True, help="Number of items")
@click.option("--n", "n", type=float, required=True, help="Horizon (non-integer allowed)")
@click.option("--delta", type=float, help="Uniform gap of all suboptimal solutions")
@click.option("--gaps-file", type=click.Path(dir_okay=False),
              help="File of per-item minimum gaps, whitespace separated")
@click.option("--format", "output_format", type=click.Choice(["text", "csv"]), default="text",
              show_default=True)
@handle_errors
def cmd_bounds(K, L, n, delta, gaps_file, output_format):
    """Print every regret bound that applies to the given parameters."""
    if delta is None and gaps_file is None:
        raise ConfigError("Give --delta, --gaps-file, or both")
    gaps = None
    if gaps_file is not None:
        gaps = read_number_list(gaps_file, "gaps").tolist()
    rows = bound_table(ProblemParams(L, K, n, delta=delta, per_item_gaps=gaps))

    if output_format == "csv":
        frame = pd.DataFrame([{"label": r.label, "kind": r.kind, "value": r.value} for r in rows],
                             columns=["label", "kind", "value"])
        click.echo(frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n"),
                   nl=False)
    else:
        for row in rows:
            click.echo(row.format())


@cli.command("verify")
@click.option("--full", is_flag=True, help="Use 10^6 coverage samples instead of 10^5")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@handle_errors
def cmd_verify(full, seed):
    """Run the self-checks; exit status 0 iff all pass."""
    results = run_verification(fast=not full, seed=seed)
    for result in results:
        click.echo(result.format())
    failed = sum(not r.passed for r in results)
    click.echo(f"{len(results) - failed}/{len(results)} checks passed")
    if failed:
        sys.exit(EXIT_FAILURE)


def main():
    """Console script entry point."""
    cli(prog_name="semibandit")


if __name__ == "__main__":
    main()
