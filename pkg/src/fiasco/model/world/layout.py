"""Map geometry: buildings, walls, doors and container lattices."""

import math
from dataclasses import dataclass
from typing import List, Tuple

from ..navigation import Cell, GridMap
from ...config.models import Rect, WorldConfig


@dataclass(frozen=True)
class Building:
    """A walled building with one door and a lattice of container cells."""

    rect: Rect
    door: Cell
    slots: Tuple[Cell, ...]

    def walls(self) -> List[Cell]:
        """Perimeter cells except the door."""
        r = self.rect
        cells = set()
        for x in range(r.x, r.x + r.width):
            cells.add((x, r.y))
            cells.add((x, r.y + r.height - 1))
        for y in range(r.y, r.y + r.height):
            cells.add((r.x, y))
            cells.add((r.x + r.width - 1, y))
        cells.discard(self.door)
        return sorted(cells)

    @property
    def inward(self) -> Tuple[int, int]:
        """Unit step from the door into the building."""
        r = self.rect
        if self.door[1] == r.y:
            return 0, 1
        if self.door[1] == r.y + r.height - 1:
            return 0, -1
        if self.door[0] == r.x:
            return 1, 0
        return -1, 0

    @property
    def entrance(self) -> Cell:
        """First cell inside the door."""
        dx, dy = self.inward
        return self.door[0] + dx, self.door[1] + dy

    @property
    def approach(self) -> Cell:
        """Cell just outside the door."""
        dx, dy = self.inward
        return self.door[0] - dx, self.door[1] - dy

    def encloses(self, cell: Cell) -> bool:
        """True for cells strictly inside the walls."""
        r = self.rect
        return r.x < cell[0] < r.x + r.width - 1 and r.y < cell[1] < r.y + r.height - 1


def lattice_shape(containers: int) -> Tuple[int, int]:
    """Rows and columns of the most square lattice holding ``containers`` (5x6 for 30)."""
    rows = max(1, math.isqrt(containers))
    return rows, math.ceil(containers / rows)


def default_buildings(cfg: WorldConfig) -> List[Rect]:
    """
    One building per map quadrant, centered in it.

    Parameters
    ----------
    cfg : WorldConfig
        Map size and containers per building.

    Returns
    -------
    list of Rect
        Buildings in quadrant order: south-west, south-east, north-west,
        north-east.
    """
    rows, cols = lattice_shape(cfg.containers_per_building)
    width, height = 2 * cols + 3, 2 * rows + 3
    quadrant_w, quadrant_h = cfg.width // 2, cfg.height // 2
    if width > quadrant_w or height > quadrant_h:
        raise ValueError(f'A {cfg.width}x{cfg.height} map is too small for buildings of '
                         f'{cfg.containers_per_building} containers ({width}x{height} each)')
    rects = []
    for qy in (0, quadrant_h):
        for qx in (0, quadrant_w):
            rects.append(Rect(x=qx + (quadrant_w - width) // 2,
                              y=qy + (quadrant_h - height) // 2,
                              width=width, height=height))
    return rects


def _door(rect: Rect, map_height: int) -> Cell:
    # mid-wall, on the side facing the map's center row
    x = rect.x + rect.width // 2
    if rect.y + rect.height / 2 < map_height / 2:
        return x, rect.y + rect.height - 1
    return x, rect.y


def _slots(rect: Rect) -> List[Cell]:
    # one aisle cell between containers and along the walls
    return [(rect.x + 2 + 2 * c, rect.y + 2 + 2 * r)
            for r in range((rect.height - 3) // 2)
            for c in range((rect.width - 3) // 2)]


def build_layout(cfg: WorldConfig) -> Tuple[GridMap, List[Building], Cell]:
    """
    Grid, buildings and start cell for a world config.

    Parameters
    ----------
    cfg : WorldConfig
        Map size, optional building rectangles and containers per building.

    Returns
    -------
    tuple of (GridMap, list of Building, Cell)
        Walls are the only blocked cells; the start cell is the map center.
    """
    rects = cfg.buildings if cfg.buildings is not None else default_buildings(cfg)
    buildings = []
    for i, rect in enumerate(rects):
        slots = _slots(rect)
        if len(slots) < cfg.containers_per_building:
            raise ValueError(f'Building {i} fits {len(slots)} containers, '
                             f'{cfg.containers_per_building} required')
        buildings.append(Building(rect, _door(rect, cfg.height),
                                  tuple(slots[:cfg.containers_per_building])))
    blocked = frozenset(cell for b in buildings for cell in b.walls())
    grid = GridMap(cfg.width, cfg.height, blocked)
    start = (cfg.width // 2, cfg.height // 2)
    if not grid.is_free(start):
        raise ValueError(f'Start cell {start} lies on a wall')
    return grid, buildings, start
