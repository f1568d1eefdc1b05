"""Agent motion: potential field steering, stuck escape and A* planning."""

from .grid import CARDINALS, STEP_ORDER, Cell, GridMap, Heading
from .potential_field import FieldObservation, FieldVector, compute_field, field_step, step_toward
from .escape import AgentState, Continue, Escape, check_stuck_and_escape
from .astar import PathNode, astar, path_cost
