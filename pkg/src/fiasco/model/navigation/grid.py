"""Grid map and compass headings. The y axis points north."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterator, List, Tuple

Cell = Tuple[int, int]


class Heading(Enum):
    """Unit grid offsets (dx, dy)."""

    N = (0, 1)
    NE = (1, 1)
    E = (1, 0)
    SE = (1, -1)
    S = (0, -1)
    SW = (-1, -1)
    W = (-1, 0)
    NW = (-1, 1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    def apply(self, cell: Cell) -> Cell:
        """Neighbor of ``cell`` in this direction."""
        return cell[0] + self.dx, cell[1] + self.dy


CARDINALS = (Heading.N, Heading.E, Heading.S, Heading.W)
# tie-break priority for field steps
STEP_ORDER = (Heading.N, Heading.NE, Heading.E, Heading.SE,
              Heading.S, Heading.SW, Heading.W, Heading.NW)


@dataclass(frozen=True)
class GridMap:
    """
    Rectangular grid with impassable cells.

    Attributes
    ----------
    width, height : int
        Grid size; cells are (x, y) with 0 <= x < width, 0 <= y < height.
    blocked : frozenset of Cell
        Impassable cells, all within bounds.
    """

    width: int
    height: int
    blocked: FrozenSet[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f'Grid size must be positive, got {self.width}x{self.height}')
        blocked = frozenset((int(x), int(y)) for x, y in self.blocked)
        outside = [c for c in blocked if not self.in_bounds(c)]
        if outside:
            raise ValueError(f'Blocked cells out of bounds: {sorted(outside)[:5]}')
        object.__setattr__(self, 'blocked', blocked)

    def in_bounds(self, cell: Cell) -> bool:
        return 0 <= cell[0] < self.width and 0 <= cell[1] < self.height

    def is_free(self, cell: Cell) -> bool:
        """In bounds and not blocked."""
        return self.in_bounds(cell) and cell not in self.blocked

    def neighbors4(self, cell: Cell) -> Iterator[Cell]:
        """Free 4-neighbors in N, E, S, W order."""
        for heading in CARDINALS:
            neighbor = heading.apply(cell)
            if self.is_free(neighbor):
                yield neighbor

    def free_cells(self) -> List[Cell]:
        """All free cells, row-major from (0, 0)."""
        return [(x, y) for y in range(self.height) for x in range(self.width)
                if (x, y) not in self.blocked]
