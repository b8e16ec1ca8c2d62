"""Data validation utilities."""

from typing import Any, List, Sequence, Tuple

import numpy as np


def validate_checkpoints(checkpoints: Sequence[Any], horizon: int) -> Tuple[bool, List[str]]:
    """
    Validate a checkpoint schedule against the horizon.

    Args:
        checkpoints: Step indices at which regret is recorded
        horizon: Number of steps n

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    errors = []
    if len(checkpoints) == 0:
        errors.append("Checkpoint list must not be empty")
        return False, errors

    values = []
    for c in checkpoints:
        if isinstance(c, bool) or int(c) != c:
            errors.append(f"Checkpoint {c!r} is not an integer")
        else:
            values.append(int(c))

    if values and values[0] < 1:
        errors.append("Checkpoints must be >= 1")
    if values and values[-1] > horizon:
        errors.append(f"Checkpoint {values[-1]} exceeds the horizon {horizon}")
    if any(b <= a for a, b in zip(values, values[1:])):
        errors.append("Checkpoints must be strictly increasing")

    return len(errors) == 0, errors


def validate_mean_vector(means: Sequence[float]) -> Tuple[bool, List[str]]:
    """
    Validate Bernoulli means read from a file or config.

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    errors = []
    values = np.asarray(means, dtype=float)
    if values.ndim != 1 or values.size == 0:
        errors.append("Mean vector must be a nonempty list of numbers")
        return False, errors
    bad = np.flatnonzero(~(np.isfinite(values) & (values >= 0.0) & (values <= 1.0)))
    if bad.size:
        errors.append(f"Means at items {bad.tolist()} are outside [0, 1]")
    return len(errors) == 0, errors
