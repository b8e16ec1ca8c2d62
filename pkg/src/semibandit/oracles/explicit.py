"""Explicitly listed feasible sets and the exhaustive reference oracle."""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from ..exceptions import ConfigError, DimensionError, InvalidInstanceError
from ..models import Solution, as_weights, return_value
from .base import BaseOracle

# Relative slack for matrix-product scores; candidates inside it are rescored exactly.
SHORTLIST_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ExplicitFeasibleSet:
    """
    A feasible set given as a list of solutions.

    Attributes:
        solutions: Feasible solutions, stored in lexicographic order
        L: Size of the ground set
        K: Largest allowed solution size
    """

    solutions: Sequence[Solution]
    L: int
    K: int

    def __post_init__(self):
        if not self.solutions:
            raise InvalidInstanceError("Feasible set must contain at least one solution")
        if self.L < 1 or self.K < 1:
            raise InvalidInstanceError(f"L and K must be positive, got L={self.L}, K={self.K}")
        ordered = tuple(sorted(set(self.solutions)))
        covered = set()
        for solution in ordered:
            if len(solution) > self.K:
                raise InvalidInstanceError(
                    f"Solution {solution} has {len(solution)} items, more than K={self.K}"
                )
            top = solution.max_item()
            if top is not None and top >= self.L:
                raise InvalidInstanceError(f"Solution {solution} uses items outside [0, {self.L})")
            covered.update(solution.items)
        missing = sorted(set(range(self.L)) - covered)
        if missing:
            raise InvalidInstanceError(
                f"Items {missing} do not belong to any feasible solution"
            )
        object.__setattr__(self, "solutions", ordered)

    def incidence_matrix(self) -> np.ndarray:
        """0/1 matrix with one row per solution and one column per item."""
        matrix = np.zeros((len(self.solutions), self.L))
        for row, solution in enumerate(self.solutions):
            matrix[row, solution.index] = 1.0
        return matrix

    def __len__(self) -> int:
        return len(self.solutions)


def load_feasible_set(path: Union[str, Path]) -> ExplicitFeasibleSet:
    """
    Read a feasible set from a plain-text file.

    The first non-blank line is "L K"; each following line lists the items of
    one solution separated by spaces. Lines starting with '#' are ignored.

    Raises:
        ConfigError: If the file is missing or a line cannot be parsed
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Feasible set file not found: {path}")
    header = None
    solutions: List[Solution] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                values = [int(token) for token in line.split()]
            except ValueError:
                raise ConfigError(f"Expected integers, got {line!r}", line_number, str(path))
            if header is None:
                if len(values) != 2:
                    raise ConfigError("Header must be 'L K'", line_number, str(path))
                header = values
                continue
            try:
                solutions.append(Solution.from_items(values))
            except ValueError as e:
                raise ConfigError(str(e), line_number, str(path))
    if header is None:
        raise ConfigError("Feasible set file is empty", source=str(path))
    try:
        return ExplicitFeasibleSet(solutions, L=header[0], K=header[1])
    except InvalidInstanceError as e:
        raise ConfigError(str(e), source=str(path))


class ExhaustiveOracle(BaseOracle):
    """
    Reference oracle that scores every listed solution.

    Ties are broken in favour of the lexicographically smallest item sequence.
    """

    def __init__(self, feasible: ExplicitFeasibleSet):
        super().__init__(feasible.L, feasible.K)
        self.feasible = feasible
        self._incidence = feasible.incidence_matrix()

    def _scores(self, weights: np.ndarray) -> np.ndarray:
        return self._incidence @ weights

    def _best_index(self, weights: np.ndarray, scores: np.ndarray) -> Tuple[int, float]:
        """
        Index and value of the best solution under f(A, w).

        The matrix product only shortlists candidates within SHORTLIST_TOLERANCE
        of its maximum; those are rescored with return_value, whose summation
        order is fixed. Indices ascend, so the first exact maximum is also the
        lexicographically smallest.
        """
        top = float(np.max(scores))
        shortlist = np.flatnonzero(scores >= top - SHORTLIST_TOLERANCE * (1.0 + abs(top)))
        best_index, best_value = -1, float("-inf")
        for index in shortlist.tolist():
            value = return_value(self.feasible.solutions[index], weights)
            if value > best_value:
                best_index, best_value = index, value
        return best_index, best_value

    def _maximize(self, weights: np.ndarray) -> Solution:
        index, _ = self._best_index(weights, self._scores(weights))
        return self.feasible.solutions[index]

    def _best_value_containing(self, weights: np.ndarray, item: int) -> float:
        scores = np.where(self._incidence[:, item] > 0, self._scores(weights), -np.inf)
        _, value = self._best_index(weights, scores)
        return value

    def min_gaps(self, weights, optimal: Solution,
                 tolerance: float = 1e-12) -> Tuple[Dict[int, float], bool]:
        """
        Exact Delta_{e,min} by enumeration.

        Unlike the generic version, solutions that tie with the optimum are
        skipped rather than hiding the item's gap, so every suboptimal item
        covered by a strictly suboptimal solution gets its gap.
        """
        w = as_weights(weights, self.ground_size)
        scores = self._scores(w)
        best = return_value(optimal, w)
        tie_found = int(np.sum(np.abs(scores - best) <= tolerance)) > 1
        suboptimal = best - scores > tolerance
        gaps: Dict[int, float] = {}
        for item in range(self.ground_size):
            if item in optimal:
                continue
            mask = suboptimal & (self._incidence[:, item] > 0)
            if np.any(mask):
                gaps[item] = float(best - np.max(scores[mask]))
        return gaps, tie_found

    def enumerate_solutions(self) -> List[Solution]:
        return list(self.feasible.solutions)

    def describe(self):
        info = super().describe()
        info["num_solutions"] = len(self.feasible)
        return info


def exhaustive_maximize(feasible: ExplicitFeasibleSet, weights) -> Solution:
    """
    Return the solution in ``feasible`` with the largest f(A, w).

    Raises:
        DimensionError: If the weight vector length differs from L
    """
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.shape[0] != feasible.L:
        raise DimensionError(f"Expected {feasible.L} weights, got shape {w.shape}")
    return ExhaustiveOracle(feasible).maximize(as_weights(w))
