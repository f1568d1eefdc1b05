"""A* search on a 4-connected grid with unit edge cost."""

import heapq
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from .grid import Cell, GridMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathNode:
    """Search node: ``g`` is the cost from the start, ``h_est`` the estimate to the goal."""

    cell: Cell
    g: int
    h_est: int

    @property
    def f(self) -> int:
        return self.g + self.h_est


def _manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def path_cost(path: List[Cell]) -> int:
    """Number of edges in a path."""
    return len(path) - 1


def astar(grid: GridMap, start: Cell, goal: Cell,
          max_expansions: Optional[int] = None) -> Optional[List[Cell]]:
    """
    Shortest 4-connected path from ``start`` to ``goal``.

    Uses the Manhattan distance heuristic. Open nodes are ordered by f,
    then by lower h_est, then by insertion order.

    Parameters
    ----------
    grid : GridMap
        Map to search.
    start, goal : Cell
        Free, in-bounds endpoints.
    max_expansions : int, optional
        Give up after expanding this many nodes.

    Returns
    -------
    list of Cell or None
        Path including both endpoints, or None when the goal is
        unreachable (or the expansion cap was hit).
    """
    for name, cell in (('start', start), ('goal', goal)):
        if not grid.in_bounds(cell):
            raise ValueError(f'A* {name} {cell} is out of bounds')
        if cell in grid.blocked:
            raise ValueError(f'A* {name} {cell} is blocked')

    counter = itertools.count()
    start_node = PathNode(start, 0, _manhattan(start, goal))
    open_heap = [(start_node.f, start_node.h_est, next(counter), start_node)]
    came_from: Dict[Cell, Cell] = {}
    best_g: Dict[Cell, int] = {start: 0}
    closed = set()
    expansions = 0

    while open_heap:
        _, _, _, node = heapq.heappop(open_heap)
        if node.cell in closed:
            continue
        if node.cell == goal:
            path = [goal]
            while path[-1] != start:
                path.append(came_from[path[-1]])
            return path[::-1]
        closed.add(node.cell)
        expansions += 1
        if max_expansions is not None and expansions > max_expansions:
            logger.debug(f'A* gave up after {max_expansions} expansions ({start} -> {goal})')
            return None
        for neighbor in grid.neighbors4(node.cell):
            g = node.g + 1
            if neighbor in closed or g >= best_g.get(neighbor, g + 1):
                continue
            best_g[neighbor] = g
            came_from[neighbor] = node.cell
            child = PathNode(neighbor, g, _manhattan(neighbor, goal))
            heapq.heappush(open_heap, (child.f, child.h_est, next(counter), child))
    return None
