"""Active class selection: rank classes, then turn ranks into forces."""

from .ranking import ClassRanking, rank_classes
from .redistrict import redistrict_rank
from .forces import ForceAssignment, assign_forces, quartile_sizes
