"""
Longest monotone paths on an (m+1) x (m+1) grid.

Nodes are (row, col) pairs with (0, 0) the upper-left and (m, m) the
bottom-right corner. Paths move only right or down, so every corner-to-corner
path has exactly 2m edges.

Edge indexing (portable across implementations):
    right edge (i, j) -> (i, j+1), i in [0, m], j in [0, m):  i*m + j
    down edge  (i, j) -> (i+1, j), i in [0, m), j in [0, m]:  m*(m+1) + i*(m+1) + j
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from ..exceptions import InvalidInstanceError, ResourceLimitError
from ..models import Solution, as_weights, return_value
from .base import BaseOracle

Node = Tuple[int, int]

# Largest m for which all C(2m, m) paths may be listed.
MAX_ENUMERATION_M = 12


@dataclass(frozen=True)
class GridSpec:
    """
    Geometry and edge numbering of the square grid.

    Attributes:
        m: Number of edges along each side; the grid has (m+1)^2 nodes
    """

    m: int
    _right: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _down: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise InvalidInstanceError(f"Grid size m must be a positive integer, got {self.m}")
        m = int(self.m)
        object.__setattr__(self, "m", m)
        right = tuple(tuple(i * m + j for j in range(m)) for i in range(m + 1))
        down = tuple(tuple(m * (m + 1) + i * (m + 1) + j for j in range(m + 1))
                     for i in range(m))
        object.__setattr__(self, "_right", right)
        object.__setattr__(self, "_down", down)

    @property
    def num_items(self) -> int:
        """L = 2m(m+1)."""
        return 2 * self.m * (self.m + 1)

    @property
    def path_length(self) -> int:
        """K = 2m."""
        return 2 * self.m

    def right_edge(self, i: int, j: int) -> int:
        return self._right[i][j]

    def down_edge(self, i: int, j: int) -> int:
        return self._down[i][j]

    def is_right_edge(self, edge: int) -> bool:
        return 0 <= edge < self.m * (self.m + 1)

    def endpoints(self, edge: int) -> Tuple[Node, Node]:
        """Return (tail, head) of an edge."""
        m = self.m
        if not 0 <= edge < self.num_items:
            raise IndexError(f"Edge {edge} out of range [0, {self.num_items})")
        if self.is_right_edge(edge):
            i, j = divmod(edge, m)
            return (i, j), (i, j + 1)
        i, j = divmod(edge - m * (m + 1), m + 1)
        return (i, j), (i + 1, j)

    def is_leftmost_or_bottom(self, edge: int) -> bool:
        """True for down edges in column 0 and right edges in row m."""
        (i, j), _ = self.endpoints(edge)
        if self.is_right_edge(edge):
            return i == self.m
        return j == 0

    def leftmost_bottom_path(self) -> Solution:
        """The path down the left column, then along the bottom row."""
        edges = [self.down_edge(i, 0) for i in range(self.m)]
        edges += [self.right_edge(self.m, j) for j in range(self.m)]
        return Solution.from_items(edges)

    def path_from_moves(self, moves: str) -> Solution:
        """Build a path from a string of 'D' and 'R' moves."""
        i = j = 0
        edges = []
        for move in moves:
            if move == "D":
                edges.append(self.down_edge(i, j))
                i += 1
            elif move == "R":
                edges.append(self.right_edge(i, j))
                j += 1
            else:
                raise ValueError(f"Unknown move {move!r}")
        if (i, j) != (self.m, self.m):
            raise ValueError(f"Moves {moves!r} do not end in the bottom-right corner")
        return Solution.from_items(edges)


def _suffix_values(grid: GridSpec, w: List[float]) -> List[List[float]]:
    """Best value from each node to (m, m); down wins ties."""
    m = grid.m
    right, down = grid._right, grid._down
    suffix = [[0.0] * (m + 1) for _ in range(m + 1)]
    for i in range(m, -1, -1):
        row = suffix[i]
        for j in range(m, -1, -1):
            if i == m and j == m:
                continue
            best = float("-inf")
            if i < m:
                best = w[down[i][j]] + suffix[i + 1][j]
            if j < m:
                candidate = w[right[i][j]] + row[j + 1]
                if candidate > best:
                    best = candidate
            row[j] = best
    return suffix


def _prefix_values(grid: GridSpec, w: List[float]) -> List[List[float]]:
    """Best value from (0, 0) to each node."""
    m = grid.m
    right, down = grid._right, grid._down
    prefix = [[0.0] * (m + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        row = prefix[i]
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            best = float("-inf")
            if i > 0:
                best = prefix[i - 1][j] + w[down[i - 1][j]]
            if j > 0:
                candidate = row[j - 1] + w[right[i][j - 1]]
                if candidate > best:
                    best = candidate
            row[j] = best
    return prefix


def _walk(grid: GridSpec, w: List[float], suffix: List[List[float]]) -> Solution:
    m = grid.m
    right, down = grid._right, grid._down
    i = j = 0
    edges = []
    while (i, j) != (m, m):
        if j == m:
            go_down = True
        elif i == m:
            go_down = False
        else:
            go_down = (w[down[i][j]] + suffix[i + 1][j]
                       >= w[right[i][j]] + suffix[i][j + 1])
        if go_down:
            edges.append(down[i][j])
            i += 1
        else:
            edges.append(right[i][j])
            j += 1
    return Solution(tuple(sorted(edges)))


def grid_maximize(grid: GridSpec, weights) -> Solution:
    """
    Return a maximum-weight monotone corner-to-corner path.

    Dynamic programming over the grid DAG in reverse topological order; at
    equal values the down edge is taken.

    Raises:
        DimensionError: If the weight vector length is not 2m(m+1)
    """
    w = as_weights(weights, grid.num_items).tolist()
    return _walk(grid, w, _suffix_values(grid, w))


def grid_best_through_edge(grid: GridSpec, weights, edge: int) -> float:
    """
    Return the largest path weight among paths that use ``edge``.

    Computed as best prefix to the edge's tail + w(edge) + best suffix from
    its head.

    Raises:
        DimensionError: If the weight vector length is not 2m(m+1)
    """
    w = as_weights(weights, grid.num_items).tolist()
    (ti, tj), (hi, hj) = grid.endpoints(edge)
    prefix = _prefix_values(grid, w)
    suffix = _suffix_values(grid, w)
    return prefix[ti][tj] + w[edge] + suffix[hi][hj]


def grid_enumerate_paths(grid: GridSpec) -> List[Solution]:
    """
    List all C(2m, m) monotone corner-to-corner paths.

    Raises:
        ResourceLimitError: If m exceeds MAX_ENUMERATION_M
    """
    if grid.m > MAX_ENUMERATION_M:
        raise ResourceLimitError(
            f"Refusing to enumerate paths for m={grid.m} > {MAX_ENUMERATION_M}"
        )
    m = grid.m
    paths = []
    for down_positions in itertools.combinations(range(2 * m), m):
        downs = set(down_positions)
        moves = "".join("D" if k in downs else "R" for k in range(2 * m))
        paths.append(grid.path_from_moves(moves))
    return paths


class GridOracle(BaseOracle):
    """
    Longest-path oracle on the (m+1) x (m+1) grid.

    Ties are broken by preferring the down edge whenever both continuations
    reach equal value.
    """

    def __init__(self, grid: GridSpec):
        super().__init__(grid.num_items, grid.path_length)
        self.grid = grid

    def _maximize(self, weights: np.ndarray) -> Solution:
        w = weights.tolist()
        return _walk(self.grid, w, _suffix_values(self.grid, w))

    def _best_value_containing(self, weights: np.ndarray, item: int) -> float:
        return grid_best_through_edge(self.grid, weights, item)

    def best_values_through_edges(self, weights) -> np.ndarray:
        """grid_best_through_edge for every edge, sharing the two DP sweeps."""
        w = as_weights(weights, self.grid.num_items).tolist()
        prefix = _prefix_values(self.grid, w)
        suffix = _suffix_values(self.grid, w)
        values = np.empty(self.grid.num_items)
        for edge in range(self.grid.num_items):
            (ti, tj), (hi, hj) = self.grid.endpoints(edge)
            values[edge] = prefix[ti][tj] + w[edge] + suffix[hi][hj]
        return values

    def min_gaps(self, weights, optimal: Solution,
                 tolerance: float = 1e-12) -> Tuple[Dict[int, float], bool]:
        w = as_weights(weights, self.grid.num_items)
        best = return_value(optimal, w)
        through = self.best_values_through_edges(w)
        gaps: Dict[int, float] = {}
        tie_found = False
        for edge in range(self.grid.num_items):
            if edge in optimal:
                continue
            gap = best - float(through[edge])
            if gap <= tolerance:
                tie_found = True
                continue
            gaps[edge] = gap
        return gaps, tie_found

    def enumerate_solutions(self) -> List[Solution]:
        return grid_enumerate_paths(self.grid)

    def describe(self):
        info = super().describe()
        info["m"] = self.grid.m
        return info
