"""World and exploration loop config."""

from typing import Dict, List, Optional

from pydantic import BaseModel, PositiveInt, PositiveFloat, conint, validator, root_validator

from .enums import EscapeMode, LabelMode


class Rect(BaseModel):
    """Outer wall rectangle of a building, in grid cells."""

    x: conint(ge=0)  # type: ignore
    y: conint(ge=0)  # type: ignore
    width: conint(ge=3)  # type: ignore
    height: conint(ge=3)  # type: ignore

    class Config:
        extra = 'forbid'
        allow_mutation = False

    def overlaps(self, other: 'Rect') -> bool:
        """Return True if the two rectangles share at least one cell."""
        return not (self.x + self.width <= other.x or other.x + other.width <= self.x
                    or self.y + self.height <= other.y or other.y + other.height <= self.y)


class WorldConfig(BaseModel):
    """Data schema and validator of the simulated environment."""

    width: PositiveInt = 60
    height: PositiveInt = 60
    buildings: Optional[List[Rect]] = None
    containers_per_building: PositiveInt = 30
    d_far: PositiveFloat = 15.0
    d_close: PositiveFloat = 1.0
    harvest_min: PositiveInt = 5
    harvest_max: PositiveInt = 9
    label_mode: LabelMode = LabelMode.ORACLE
    request_size: PositiveInt = 10
    steps_per_interval: conint(ge=0) = 200  # type: ignore
    num_intervals: conint(ge=0) = 30  # type: ignore
    eval_every: Optional[PositiveInt] = None
    stuck_limit: PositiveInt = 5
    escape_stride: conint(ge=0) = 5  # type: ignore
    escape_mode: EscapeMode = EscapeMode.RESET
    bootstrap_per_class: conint(ge=0) = 1  # type: ignore
    max_relocations: PositiveInt = 20

    class Config:
        extra = 'forbid'
        allow_mutation = False

    @validator('eval_every', always=True)
    def default_eval_every(cls, eval_every: Optional[int], values: Dict) -> Optional[int]:
        """Evaluate every interval in Oracle mode, every 3 in Predicted mode."""
        if eval_every is not None:
            return eval_every
        if values.get('label_mode') == LabelMode.PREDICTED:
            return 3
        return 1

    @validator('buildings')
    def four_disjoint_buildings(cls,
                                buildings: Optional[List[Rect]],
                                values: Dict,
                                ) -> Optional[List[Rect]]:
        """
        Check there are exactly four disjoint, in-bounds buildings.

        Parameters
        ----------
        buildings : list of Rect, optional
            Building rectangles; None selects the default layout.
        values : dict
            Previously validated fields.

        Returns
        -------
        list of Rect or None
            The validated buildings.
        """
        if buildings is None:
            return buildings
        if len(buildings) != 4:
            raise ValueError(f'Exactly 4 buildings are required, got {len(buildings)}')
        width, height = values.get('width'), values.get('height')
        for i, rect in enumerate(buildings):
            if width is not None and rect.x + rect.width > width:
                raise ValueError(f'Building {i} exceeds the map width ({width})')
            if height is not None and rect.y + rect.height > height:
                raise ValueError(f'Building {i} exceeds the map height ({height})')
            for j in range(i):
                if rect.overlaps(buildings[j]):
                    raise ValueError(f'Buildings {j} and {i} overlap')
        return buildings

    @root_validator(skip_on_failure=True)
    def consistent_ranges(cls, values: Dict) -> Dict:
        """Check d_close < d_far and harvest_min <= harvest_max."""
        if values['d_close'] >= values['d_far']:
            raise ValueError(f"d_close ({values['d_close']}) must be smaller than "
                             f"d_far ({values['d_far']})")
        if values['harvest_min'] > values['harvest_max']:
            raise ValueError(f"harvest_min ({values['harvest_min']}) must not exceed "
                             f"harvest_max ({values['harvest_max']})")
        if values['label_mode'] == LabelMode.PREDICTED and values['bootstrap_per_class'] < 1:
            raise ValueError('Predicted label mode needs bootstrap_per_class >= 1 '
                             'to have an initial classifier')
        return values
