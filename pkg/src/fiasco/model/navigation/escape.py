"""Agent state and local-minimum escape."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Union

import numpy as np

from .astar import astar
from .grid import CARDINALS, Cell, GridMap, Heading

logger = logging.getLogger(__name__)


@dataclass
class AgentState:
    """
    Mutable agent state.

    Attributes
    ----------
    pos : Cell
        Current cell.
    start : Cell
        Cell the agent returns to when stuck.
    visit_counts : collections.Counter
        Steps spent on each cell since the last escape.
    last_outbound_direction : Heading
        Heading chosen at the last escape.
    escape_steps : int
        Remaining steps of the current outbound stride.
    return_path : list of Cell
        Remaining cells of a walked return to ``start``.
    """

    pos: Cell
    start: Cell
    visit_counts: Counter = field(default_factory=Counter)
    last_outbound_direction: Heading = Heading.N
    escape_steps: int = 0
    return_path: List[Cell] = field(default_factory=list)

    @classmethod
    def at(cls, start: Cell) -> AgentState:
        """Fresh agent standing on its start cell."""
        return cls(pos=start, start=start)

    @property
    def is_returning(self) -> bool:
        return bool(self.return_path)


@dataclass(frozen=True)
class Continue:
    """The agent is not stuck."""


@dataclass(frozen=True)
class Escape:
    """The agent was sent back to start and heads out along ``heading``."""

    heading: Heading


EscapeDecision = Union[Continue, Escape]


def check_stuck_and_escape(agent: AgentState,
                           grid: GridMap,
                           limit: int,
                           rng: np.random.Generator,
                           stride: int = 5,
                           walk: bool = False) -> EscapeDecision:
    """
    Count a step on the current cell and escape once it is visited too often.

    On escape the visit counts are cleared, a new outbound heading is
    drawn uniformly from the three cardinals other than the previous one,
    and the next ``stride`` steps follow it. The agent is put back on its
    start cell, or with ``walk`` given an A* path back to it.

    Parameters
    ----------
    agent : AgentState
        Agent to check; mutated on escape.
    grid : GridMap
        Map used for the walked return.
    limit : int
        Visits allowed on one cell.
    rng : numpy.random.Generator
        Heading draw.
    stride : int, default 5
        Outbound steps before field steering resumes.
    walk : bool, default False
        Walk back to start instead of resetting.

    Returns
    -------
    Continue or Escape
    """
    if limit < 1:
        raise ValueError(f'Stuck limit must be at least 1, got {limit}')
    agent.visit_counts[agent.pos] += 1
    if agent.visit_counts[agent.pos] <= limit:
        return Continue()

    options = [h for h in CARDINALS if h != agent.last_outbound_direction]
    heading = options[int(rng.integers(len(options)))]
    stuck_at = agent.pos
    if walk and agent.pos != agent.start:
        path = astar(grid, agent.pos, agent.start)
        if path is None:
            logger.warning(f'No path from {agent.pos} back to start, resetting instead')
            agent.pos = agent.start
        else:
            agent.return_path = path[1:]
    else:
        agent.pos = agent.start
    agent.visit_counts.clear()
    agent.last_outbound_direction = heading
    agent.escape_steps = stride
    logger.debug(f'Stuck at {stuck_at}, escaping {heading.name}')
    return Escape(heading)
