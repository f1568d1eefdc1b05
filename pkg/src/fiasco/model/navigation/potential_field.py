"""Potential field over observed objects and the discrete step rule."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, TYPE_CHECKING

from .grid import STEP_ORDER, Cell, GridMap

if TYPE_CHECKING:
    from .escape import AgentState


@dataclass(frozen=True)
class FieldObservation:
    """An observed object at ``cell`` exerting ``force`` (negative attracts)."""

    cell: Cell
    class_id: int
    force: float


@dataclass(frozen=True)
class FieldVector:
    """Summed field (F_x, F_y)."""

    fx: float = 0.0
    fy: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.fx) and math.isfinite(self.fy)):
            raise ValueError(f'Field must be finite, got ({self.fx}, {self.fy})')

    def __add__(self, other: FieldVector) -> FieldVector:
        return FieldVector(self.fx + other.fx, self.fy + other.fy)

    @property
    def is_zero(self) -> bool:
        return self.fx == 0.0 and self.fy == 0.0


def compute_field(observations: Iterable[FieldObservation], pos: Cell) -> FieldVector:
    """
    Sum force-over-displacement terms per axis.

    ``F_x = sum f_i / (x_i - x_0)`` and likewise for y. A term whose
    displacement on an axis is zero contributes nothing on that axis.

    Parameters
    ----------
    observations : iterable of FieldObservation
        Objects in view.
    pos : Cell
        Agent position (x_0, y_0).

    Returns
    -------
    FieldVector
    """
    fx = fy = 0.0
    for obs in observations:
        dx = obs.cell[0] - pos[0]
        dy = obs.cell[1] - pos[1]
        if dx:
            fx += obs.force / dx
        if dy:
            fy += obs.force / dy
    return FieldVector(fx, fy)


def _best_neighbor(pos: Cell, direction: Tuple[float, float], grid: GridMap) -> Optional[Cell]:
    best, best_dot = None, -math.inf
    for heading in STEP_ORDER:
        candidate = heading.apply(pos)
        if not grid.is_free(candidate):
            continue
        dot = (heading.dx * direction[0] + heading.dy * direction[1]) / math.hypot(heading.dx,
                                                                                  heading.dy)
        if dot > best_dot:
            best, best_dot = candidate, dot
    return best


def step_toward(pos: Cell, direction: Tuple[float, float], grid: GridMap) -> Cell:
    """
    One step to the free 8-neighbor best aligned with ``direction``.

    Ties go to the earlier heading in N, NE, E, SE, S, SW, W, NW order;
    the agent stays when the direction is zero or every neighbor is blocked.
    """
    norm = math.hypot(*direction)
    if norm == 0.0:
        return pos
    best = _best_neighbor(pos, (direction[0] / norm, direction[1] / norm), grid)
    return pos if best is None else best


def field_step(agent: AgentState, field: FieldVector, grid: GridMap) -> Cell:
    """
    Move the agent one cell along the field.

    Negative forces attract, so the agent moves against the summed
    vector ``-(F_x, F_y)``.

    Parameters
    ----------
    agent : AgentState
        Agent to move; ``agent.pos`` is updated in place.
    field : FieldVector
        Field at the agent's position.
    grid : GridMap
        Map whose blocked cells are never entered.

    Returns
    -------
    Cell
        The new position.
    """
    agent.pos = step_toward(agent.pos, (-field.fx, -field.fy), grid)
    return agent.pos
