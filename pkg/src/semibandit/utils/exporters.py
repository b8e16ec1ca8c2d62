"""Result export utilities."""

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional, Union

import pandas as pd

from ..models import AggregateResult, BoundComparison
from .logger import get_logger

logger = get_logger(__name__)

# 17 significant digits round-trip every float64.
FLOAT_FORMAT = "%.17g"

TRACE_COLUMNS = ["run", "checkpoint", "pseudo_regret", "realized_regret"]
AGGREGATE_COLUMNS = ["checkpoint", "mean", "std", "bound", "ratio"]


def atomic_write_text(path: Union[str, Path], text: str) -> Path:
    """Write ``text`` to a temp file next to ``path``, then rename it into place."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path


def traces_frame(result: AggregateResult) -> pd.DataFrame:
    """One row per (run, checkpoint)."""
    frames = [
        pd.DataFrame({
            "run": trace.run_index,
            "checkpoint": trace.checkpoints,
            "pseudo_regret": trace.cumulative_pseudo,
            "realized_regret": trace.cumulative_realized,
        })
        for trace in result.traces
    ]
    if not frames:
        return pd.DataFrame(columns=TRACE_COLUMNS)
    return pd.concat(frames, ignore_index=True)[TRACE_COLUMNS]


def aggregate_frame(result: AggregateResult,
                    comparison: Optional[BoundComparison] = None) -> pd.DataFrame:
    """Mean and std per checkpoint, with the bound and ratio when available."""
    frame = pd.DataFrame({
        "checkpoint": result.checkpoints,
        "mean": result.mean,
        "std": result.std,
    })
    if comparison is not None:
        frame["bound"] = comparison.bound
        frame["ratio"] = comparison.ratios
    else:
        frame["bound"] = float("nan")
        frame["ratio"] = float("nan")
    return frame[AGGREGATE_COLUMNS]


class ResultExporter:
    """Writes experiment results into one output directory."""

    def __init__(self, output_dir: Union[str, Path]):
        """
        Initialize the exporter.

        Args:
            output_dir: Directory for all files; created on first write
        """
        self.output_dir = Path(output_dir)

    def write_frame(self, frame: pd.DataFrame, filename: str) -> Path:
        """Write a DataFrame as CSV with 17 significant digits per float."""
        text = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        path = atomic_write_text(self.output_dir / filename, text)
        logger.info("Wrote %s", path)
        return path

    def write_traces(self, result: AggregateResult, filename: str = "traces.csv") -> Path:
        return self.write_frame(traces_frame(result), filename)

    def write_aggregate(self, result: AggregateResult,
                        comparison: Optional[BoundComparison] = None,
                        filename: str = "aggregate.csv") -> Path:
        return self.write_frame(aggregate_frame(result, comparison), filename)

    def write_json(self, data: Dict[str, Any], filename: str) -> Path:
        """Write a JSON document (keys sorted, so output is reproducible)."""
        text = json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"
        path = atomic_write_text(self.output_dir / filename, text)
        logger.info("Wrote %s", path)
        return path
