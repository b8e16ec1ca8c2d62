"""Solution and weight-vector primitives of a combinatorial semi-bandit."""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import (
    DimensionError,
    InvalidObservationError,
    InvalidSolutionError,
    InvalidWeightsError,
)

# Items of the ground set are zero-based integer indices.
ItemId = int

# Weight vectors are float64 numpy arrays of length L.
WeightVector = np.ndarray

ArrayLike = Union[Sequence[float], np.ndarray]


@dataclass(frozen=True)
class Solution:
    """
    A feasible subset of ground items.

    Items are stored as a strictly increasing tuple, so two solutions with the
    same items compare (and hash) equal and sort lexicographically.

    Attributes:
        items: Strictly increasing item indices
    """

    items: Tuple[ItemId, ...]
    _index: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate ordering and cache the index array."""
        items = tuple(int(e) for e in self.items)
        for e in items:
            if e < 0:
                raise InvalidSolutionError(f"Negative item index {e} in solution")
        for prev, nxt in zip(items, items[1:]):
            if nxt <= prev:
                raise InvalidSolutionError(
                    f"Solution items must be strictly increasing, got {items}"
                )
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "_index", np.asarray(items, dtype=np.intp))

    @classmethod
    def from_items(cls, items: Iterable[int]) -> "Solution":
        """
        Build a solution from items in any order.

        Raises:
            InvalidSolutionError: If an item appears twice
        """
        values = [int(e) for e in items]
        if len(set(values)) != len(values):
            raise InvalidSolutionError(f"Duplicate items in solution: {values}")
        return cls(tuple(sorted(values)))

    @property
    def index(self) -> np.ndarray:
        """Items as a numpy index array (read-only use)."""
        return self._index

    def max_item(self) -> Optional[int]:
        """Largest item index, or None for the empty solution."""
        return self.items[-1] if self.items else None

    def to_list(self) -> list:
        return list(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[int]:
        return iter(self.items)

    def __contains__(self, item: object) -> bool:
        return item in self.items

    def __lt__(self, other: "Solution") -> bool:
        return self.items < other.items

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.items) + "}"


def return_value(solution: Solution, weights: ArrayLike) -> float:
    """
    Return f(A, w), the sum of the weights of the items in the solution.

    The sum runs over items in ascending index order so that results are
    reproducible bit for bit.

    Args:
        solution: Chosen solution
        weights: Weight vector indexed by item

    Returns:
        Total weight of the solution

    Raises:
        InvalidSolutionError: If an item does not index into the weights
    """
    top = solution.max_item()
    if top is not None and top >= len(weights):
        raise InvalidSolutionError(
            f"Item {top} is out of range for a weight vector of length {len(weights)}"
        )
    total = 0.0
    for w in np.asarray(weights, dtype=float)[solution.index].tolist():
        total += w
    return total


def as_weights(values: ArrayLike, size: Optional[int] = None) -> WeightVector:
    """
    Convert oracle input to a validated weight vector.

    Oracle input may exceed 1 (UCBs do) but must be finite and nonnegative.

    Raises:
        DimensionError: If the length differs from ``size``
        InvalidWeightsError: If an entry is negative or not finite
    """
    w = np.asarray(values, dtype=float)
    if w.ndim != 1:
        raise DimensionError(f"Weight vector must be one-dimensional, got shape {w.shape}")
    if size is not None and w.shape[0] != size:
        raise DimensionError(f"Expected {size} weights, got {w.shape[0]}")
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise InvalidWeightsError("Oracle weights must be finite and nonnegative")
    return w


def as_observation(values: ArrayLike, size: Optional[int] = None) -> WeightVector:
    """
    Convert a realization from P to a validated weight vector in [0, 1]^L.

    Raises:
        DimensionError: If the length differs from ``size``
        InvalidObservationError: If an entry lies outside [0, 1]
    """
    w = np.asarray(values, dtype=float)
    if w.ndim != 1:
        raise DimensionError(f"Observation must be one-dimensional, got shape {w.shape}")
    if size is not None and w.shape[0] != size:
        raise DimensionError(f"Expected {size} weights, got {w.shape[0]}")
    if np.any(~((w >= 0.0) & (w <= 1.0))):
        raise InvalidObservationError("Observed weights must lie in [0, 1]")
    return w
