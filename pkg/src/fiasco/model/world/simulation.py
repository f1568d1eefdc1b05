"""The per-interval exploration loop."""

import logging
from typing import List

import numpy as np

from .learners import Learner
from .world import Sighting, World, distance
from ..class_selection import assign_forces
from ..feature_store import LabeledBatch
from ..navigation import (AgentState, Cell, FieldObservation, astar, check_stuck_and_escape,
                          compute_field, field_step, step_toward)
from ...config.models import EscapeMode, LabelMode, WorldConfig

logger = logging.getLogger(__name__)


def _field_observations(world: World, pos: Cell, sightings: List[Sighting],
                        learner: Learner) -> List[FieldObservation]:
    # containers behind walls pull through the doors
    observed = {s.label for s in sightings}
    forces = assign_forces(learner.ranking.restrict(observed), learner.method.force_split)
    return [FieldObservation(world.steering_target(pos, s.container), s.label, forces[s.label])
            for s in sightings if s.label in forces]


def _explore_step(world: World, agent: AgentState, learner: Learner, cfg: WorldConfig,
                  rng: np.random.Generator) -> None:
    if agent.return_path:
        agent.pos = agent.return_path.pop(0)
        return

    sightings = world.observe(agent.pos)
    if agent.escape_steps > 0:
        heading = agent.last_outbound_direction
        agent.pos = step_toward(agent.pos, (heading.dx, heading.dy), world.grid)
        agent.escape_steps -= 1
    elif sightings:
        field = compute_field(_field_observations(world, agent.pos, sightings, learner), agent.pos)
        field_step(agent, field, world.grid)
    else:
        heading = agent.last_outbound_direction
        agent.pos = step_toward(agent.pos, (heading.dx, heading.dy), world.grid)
    check_stuck_and_escape(agent, world.grid, cfg.stuck_limit, rng, cfg.escape_stride,
                           walk=cfg.escape_mode == EscapeMode.WALK)


def _run_oracle_interval(world: World, agent: AgentState, learner: Learner, cfg: WorldConfig,
                         rng: np.random.Generator) -> LabeledBatch:
    batches = []
    for _ in range(cfg.steps_per_interval):
        _explore_step(world, agent, learner, cfg, rng)
        batch = world.harvest(agent.pos)
        if len(batch):
            batches.append(batch)
    return LabeledBatch.concat(batches, dim=world.dataset.dim)


def _relocate(world: World, agent: AgentState) -> None:
    rng = world.relocation_rng
    target = world.free_cells[int(rng.integers(len(world.free_cells)))]
    if astar(world.grid, agent.pos, target) is not None:
        agent.pos = target


def _run_request_iteration(world: World, agent: AgentState, learner: Learner, cfg: WorldConfig,
                           rng: np.random.Generator) -> LabeledBatch:
    empty = LabeledBatch.empty(world.dataset.dim)
    sightings = world.observe(agent.pos, learner.classifier, LabelMode.PREDICTED)
    relocations = 0
    while not sightings and relocations < cfg.max_relocations:
        _relocate(world, agent)
        relocations += 1
        sightings = world.observe(agent.pos, learner.classifier, LabelMode.PREDICTED)
    if not sightings:
        logger.warning(f'Nothing in view after {relocations} relocations, no request made')
        return empty

    candidates = learner.ranking.restrict({s.label for s in sightings})
    if not len(candidates):
        logger.warning('No observed label is ranked by the learner, no request made')
        return empty
    requested = candidates.top()
    target = min((s for s in sightings if s.label == requested),
                 key=lambda s: distance(s.cell, agent.pos))
    path = astar(world.grid, agent.pos, target.cell)
    if path is None:
        logger.warning(f'No path to the container of predicted class {requested} '
                       f'at {target.cell}')
        return empty
    agent.pos = path[-1]
    batch = world.harvest(agent.pos, count=cfg.request_size)
    logger.debug(f'Requested class {requested}, received {len(batch)} examples of class '
                 f'{target.container.class_id}')
    return batch


def run_interval(world: World, agent: AgentState, learner: Learner, cfg: WorldConfig,
                 rng: np.random.Generator) -> LabeledBatch:
    """
    Explore for one interval and collect the harvested examples.

    In Oracle mode the agent takes ``steps_per_interval`` steps: observe,
    assign forces to the observed classes by the learner's ranking,
    step along the potential field (or along the outbound heading while
    escaping or when nothing is in view), check for a local minimum and
    harvest. In Predicted mode one interval is one request: observe
    (relocating while nothing is in view), pick the best-ranked predicted
    label, walk to its container with A* and receive ``request_size``
    examples.

    Parameters
    ----------
    world : World
        Environment; containers are unstocked by harvesting.
    agent : AgentState
        Agent; moved in place.
    learner : Learner
        Supplies the ranking, force split and (Predicted mode) classifier.
    cfg : WorldConfig
        Loop settings.
    rng : numpy.random.Generator
        Escape headings.

    Returns
    -------
    LabeledBatch
        Examples harvested during the interval, in harvest order.
    """
    agent.visit_counts.clear()
    if cfg.label_mode == LabelMode.PREDICTED:
        return _run_request_iteration(world, agent, learner, cfg, rng)
    return _run_oracle_interval(world, agent, learner, cfg, rng)
