from typing import Callable, List, Tuple

import pytest
from src.fiasco.config.models import WorldConfig
from src.fiasco.model.feature_store import FeatureDataset
from src.fiasco.model.navigation import Cell, GridMap
from src.fiasco.model.world import Container, World

Placement = Tuple[Cell, int]


@pytest.fixture
def open_world(small_dataset: FeatureDataset) -> Callable[..., World]:
    """Factory of a 40x40 wall-free world with hand-placed stocked containers."""

    def make(placements: List[Placement], **cfg_values) -> World:
        cfg = WorldConfig(width=40, height=40, **cfg_values)
        containers = [Container(cell, 0, class_id, stocked=True)
                      for cell, class_id in placements]
        return World(small_dataset, cfg, GridMap(40, 40), [], containers, (20, 20), seed=0)

    return make
