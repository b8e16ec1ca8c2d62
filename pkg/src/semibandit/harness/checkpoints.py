"""Checkpoint schedules and per-run seed derivation."""

from typing import List

import numpy as np

from ..exceptions import ConfigError

DEFAULT_CHECKPOINT_COUNT = 20
DEFAULT_CHECKPOINT_START = 100


def geometric_checkpoints(n: int, count: int = DEFAULT_CHECKPOINT_COUNT,
                          start: int = DEFAULT_CHECKPOINT_START) -> List[int]:
    """
    Roughly geometric step indices from ``min(start, n)`` to ``n``.

    Rounding can merge neighbouring points, so fewer than ``count`` may be
    returned. The last checkpoint is always ``n``.
    """
    if n < 1 or count < 1:
        raise ConfigError(f"Need n >= 1 and count >= 1, got n={n}, count={count}")
    start = max(1, min(start, n))
    if count == 1 or start == n:
        return [int(n)]
    points = np.unique(np.rint(np.geomspace(start, n, count)).astype(np.int64))
    points[-1] = n
    return [int(p) for p in points]


def linear_checkpoints(n: int, count: int = DEFAULT_CHECKPOINT_COUNT) -> List[int]:
    """Evenly spaced step indices ending at ``n``."""
    if n < 1 or count < 1:
        raise ConfigError(f"Need n >= 1 and count >= 1, got n={n}, count={count}")
    points = np.unique(np.ceil(np.linspace(n / count, n, count)).astype(np.int64))
    points = points[points >= 1]
    points[-1] = n
    return [int(p) for p in points]


def derive_run_seed(master_seed: int, run_index: int) -> int:
    """
    Seed of run ``run_index`` under ``master_seed``.

    Uses numpy's SeedSequence with the run index as spawn key and takes the
    first 64-bit word of its generated state. The value depends only on the
    pair, so adding runs never changes the seeds of existing ones.
    """
    if master_seed < 0 or run_index < 0:
        raise ConfigError(
            f"Seeds and run indices must be nonnegative, got {master_seed}, {run_index}"
        )
    sequence = np.random.SeedSequence(int(master_seed), spawn_key=(int(run_index),))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """Generator for one run."""
    return np.random.default_rng(seed)
