"""Map rank quartiles to potential field forces."""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .ranking import ClassRanking
from ...config.models import ForceSplit


@dataclass(frozen=True)
class ForceAssignment:
    """Force per class; negative attracts, positive repels."""

    forces: Dict[int, float]

    def __getitem__(self, class_id: int) -> float:
        return self.forces[class_id]

    def __contains__(self, class_id: int) -> bool:
        return class_id in self.forces


def quartile_sizes(n: int) -> List[int]:
    """Sizes of the four rank quartiles; earlier quartiles take the remainder."""
    base, remainder = divmod(n, 4)
    return [base + 1 if q < remainder else base for q in range(4)]


def assign_forces(ranking: ClassRanking, split: ForceSplit) -> ForceAssignment:
    """
    Give every ranked class the force of its rank quartile.

    Parameters
    ----------
    ranking : ClassRanking
        Classes in order of preference.
    split : ForceSplit
        Forces for quartiles Q1..Q4.

    Returns
    -------
    ForceAssignment
    """
    forces: Tuple[float, ...] = split.forces
    assignment: Dict[int, float] = {}
    position = 0
    for quartile, size in enumerate(quartile_sizes(len(ranking))):
        for class_id in ranking.ordered[position:position + size]:
            assignment[class_id] = forces[quartile]
        position += size
    return ForceAssignment(assignment)
