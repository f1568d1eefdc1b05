"""The simulated environment: containers of dataset classes inside buildings."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Set

import numpy as np
from sklearn.cluster import KMeans

from .layout import Building, build_layout
from ..classifier import LinearClassifier, predict
from ..feature_store import FeatureDataset, LabeledBatch
from ..navigation import Cell, GridMap
from ...config.models import LabelMode, WorldConfig
from ...util.seeding import Stream, derive_seed, make_rng

logger = logging.getLogger(__name__)


@dataclass
class Container:
    """A container cell; ``class_id`` is None for unused containers."""

    cell: Cell
    building: int
    class_id: Optional[int] = None
    stocked: bool = False


@dataclass(frozen=True)
class Sighting:
    """A stocked container in view, with the label the agent assigns to it."""

    cell: Cell
    label: int
    container: Container


def distance(a: Cell, b: Cell) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


class World:
    """
    Grid, containers and the consumption ledger of one run.

    Training examples of every class are handed out without replacement
    over the whole run, in a seeded per-class order.

    Parameters
    ----------
    dataset : FeatureDataset
        Dataset whose classes fill the containers.
    cfg : WorldConfig
        Environment settings.
    grid : GridMap
        Map with walls blocked.
    buildings : list of Building
        Building geometry.
    containers : list of Container
        All containers, filled or not.
    start : Cell
        Agent start cell.
    seed : int
        Run seed.
    """

    def __init__(self, dataset: FeatureDataset, cfg: WorldConfig, grid: GridMap,
                 buildings: List[Building], containers: List[Container], start: Cell, seed: int):
        self.dataset = dataset
        self.cfg = cfg
        self.grid = grid
        self.buildings = buildings
        self.containers = containers
        self.start = start
        self.seed = seed
        self.rng = make_rng(seed, Stream.HARVEST)
        self.relocation_rng = make_rng(seed, Stream.RELOCATION)
        self.container_of: Dict[int, Container] = {c.class_id: c for c in containers
                                                   if c.class_id is not None}
        self.consumed: Dict[int, Set[int]] = {c: set() for c in dataset.classes}
        order_rng = make_rng(seed, Stream.HARVEST, 0)
        self._unconsumed: Dict[int, List[int]] = {
            c: [int(i) for i in order_rng.permutation(dataset.train_indices_of(c))]
            for c in dataset.classes
        }
        self._free_cells: Optional[List[Cell]] = None

    @property
    def env_classes(self) -> List[int]:
        """Classes placed in the environment."""
        return sorted(self.container_of)

    @property
    def free_cells(self) -> List[Cell]:
        if self._free_cells is None:
            self._free_cells = self.grid.free_cells()
        return self._free_cells

    def remaining(self, class_id: int) -> int:
        """Number of unconsumed training examples of a class."""
        return len(self._unconsumed[class_id])

    def _take(self, class_id: int, count: int) -> LabeledBatch:
        taken = self._unconsumed[class_id][:count]
        del self._unconsumed[class_id][:count]
        self.consumed[class_id].update(taken)
        return self.dataset.train.subset(taken)

    def _view(self, class_id: int) -> np.ndarray:
        pool = self._unconsumed[class_id] or list(self.dataset.train_indices_of(class_id))
        return self.dataset.train.features[pool[int(self.rng.integers(len(pool)))]]

    def observe(self, pos: Cell, classifier: Optional[LinearClassifier] = None,
                mode: LabelMode = LabelMode.ORACLE) -> List[Sighting]:
        """
        Stocked containers within ``d_far`` of ``pos``.

        Parameters
        ----------
        pos : Cell
            Agent position.
        classifier : LinearClassifier, optional
            Labels distal objects in Predicted mode.
        mode : LabelMode
            ORACLE labels with the true class; PREDICTED with the
            classifier's prediction for one random unconsumed example.

        Returns
        -------
        list of Sighting
            In container order.
        """
        if mode == LabelMode.PREDICTED and classifier is None:
            raise ValueError('Predicted label mode requires a classifier')
        sightings = []
        for container in self.containers:
            if not container.stocked or distance(container.cell, pos) > self.cfg.d_far:
                continue
            if mode == LabelMode.PREDICTED:
                label = predict(classifier, self._view(container.class_id))
            else:
                label = container.class_id
            sightings.append(Sighting(container.cell, label, container))
        return sightings

    def steering_target(self, pos: Cell, container: Container) -> Cell:
        """
        Cell the field should pull toward to reach ``container`` from ``pos``.

        A container is its own target once the agent is inside its
        building. Otherwise the agent is routed through doors: out of the
        building it stands in (entrance, door, approach cell), then to the
        target building's approach cell, door and entrance. Containers
        outside any known building are their own target.

        Parameters
        ----------
        pos : Cell
            Agent position.
        container : Container
            Observed container.

        Returns
        -------
        Cell
        """
        if not 0 <= container.building < len(self.buildings):
            return container.cell
        target = self.buildings[container.building]
        if target.encloses(pos):
            return container.cell
        if pos == target.door:
            return target.entrance
        if pos == target.approach:
            return target.door

        for building in self.buildings:
            if building is target:
                continue
            if pos == building.door:
                return building.approach
            if building.encloses(pos):
                return building.door if pos == building.entrance else building.entrance
        return target.approach

    def harvest(self, pos: Cell, count: Optional[int] = None) -> LabeledBatch:
        """
        Empty the nearest stocked container within ``d_close``.

        Parameters
        ----------
        pos : Cell
            Agent position.
        count : int, optional
            Examples requested; a uniform draw from
            [harvest_min, harvest_max] when omitted.

        Returns
        -------
        LabeledBatch
            At most ``count`` unconsumed training examples of the
            container's class; empty when no stocked container is close.
        """
        close = [c for c in self.containers
                 if c.stocked and distance(c.cell, pos) <= self.cfg.d_close]
        if not close:
            return LabeledBatch.empty(self.dataset.dim)
        container = min(close, key=lambda c: distance(c.cell, pos))
        if count is None:
            count = int(self.rng.integers(self.cfg.harvest_min, self.cfg.harvest_max + 1))
        batch = self._take(container.class_id, count)
        container.stocked = False
        logger.debug(f'Harvested {len(batch)} examples of class {container.class_id} '
                     f'at {container.cell}')
        return batch

    def take_bootstrap(self, per_class: int) -> LabeledBatch:
        """Consume ``per_class`` examples of every environment class."""
        return LabeledBatch.concat([self._take(c, per_class) for c in self.env_classes],
                                   dim=self.dataset.dim)

    def restock(self) -> None:
        """Stock every container whose class still has unconsumed examples."""
        for class_id, container in self.container_of.items():
            container.stocked = self.remaining(class_id) > 0

    def to_dict(self) -> Dict:
        """Layout dump for reproducibility."""
        return {
            'width': self.grid.width,
            'height': self.grid.height,
            'start': list(self.start),
            'seed': self.seed,
            'buildings': [{'x': b.rect.x, 'y': b.rect.y, 'width': b.rect.width,
                           'height': b.rect.height, 'door': list(b.door)}
                          for b in self.buildings],
            'containers': [{'cell': list(c.cell), 'building': c.building,
                            'class_id': c.class_id} for c in self.containers],
        }


def _group_classes(means: np.ndarray, groups: int, capacity: int, seed: int) -> List[List[int]]:
    class_count = means.shape[0]
    k = min(groups, class_count)
    kmeans = KMeans(n_clusters=k, n_init=10, random_state=seed).fit(means)
    labels = kmeans.labels_.copy()
    centers = kmeans.cluster_centers_

    while True:
        sizes = np.bincount(labels, minlength=groups)
        over = [g for g in range(k) if sizes[g] > capacity]
        if not over:
            break
        source = over[0]
        targets = [g for g in range(k) if sizes[g] < capacity]
        if not targets:
            targets = [g for g in range(k, groups)]
        best = None
        for member in np.flatnonzero(labels == source):
            for target in targets:
                center = centers[target] if target < k else centers[source]
                d = float(np.linalg.norm(means[member] - center))
                if best is None or d < best[0]:
                    best = (d, int(member), target)
        labels[best[1]] = best[2]

    return [sorted(int(c) for c in np.flatnonzero(labels == g)) for g in range(groups)]


def build_world(dataset: FeatureDataset, cfg: WorldConfig, seed: int) -> World:
    """
    Place the dataset's classes in four buildings.

    Classes are grouped by seeded k-means on their mean training vectors,
    groups above building capacity are rebalanced by moving the member
    closest to another group's center, and each building assigns its
    classes to a seeded shuffle of its container cells.

    Parameters
    ----------
    dataset : FeatureDataset
        Classes to place.
    cfg : WorldConfig
        Environment settings.
    seed : int
        Run seed.

    Returns
    -------
    World
        All filled containers stocked.
    """
    grid, buildings, start = build_layout(cfg)
    capacity = cfg.containers_per_building
    if dataset.class_count > len(buildings) * capacity:
        raise ValueError(f'{dataset.class_count} classes do not fit in {len(buildings)} '
                         f'buildings of {capacity} containers')

    layout_seed = derive_seed(seed, Stream.WORLD_LAYOUT)
    groups = _group_classes(dataset.class_means(), len(buildings), capacity, layout_seed)
    rng = np.random.default_rng(layout_seed)
    containers = []
    for index, (building, classes) in enumerate(zip(buildings, groups)):
        cells = [building.slots[i] for i in rng.permutation(len(building.slots))]
        assigned = dict(zip(cells, classes))
        for cell in building.slots:
            class_id = assigned.get(cell)
            containers.append(Container(cell, index, class_id, stocked=class_id is not None))

    world = World(dataset, cfg, grid, buildings, containers, start, seed)
    logger.info(f'Placed {dataset.class_count} classes in {len(containers)} containers '
                f'({[len(g) for g in groups]} per building)')
    return world
