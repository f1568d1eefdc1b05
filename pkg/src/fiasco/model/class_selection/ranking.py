"""Rank classes by cluster statistics."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..cluster_memory import ClassStats
from ...config.models import AcsPolicy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassRanking:
    """
    Classes in order of preference.

    Attributes
    ----------
    ordered : tuple of int
        Class ids, most preferred first.
    scores : dict
        Statistic each class was ranked by.
    """

    ordered: Tuple[int, ...]
    scores: Dict[int, float]

    def __post_init__(self):
        if len(set(self.ordered)) != len(self.ordered):
            raise ValueError(f'Ranking holds duplicate classes: {self.ordered}')
        if set(self.scores) != set(self.ordered):
            raise ValueError('Ranking scores must cover exactly the ranked classes')

    def __len__(self) -> int:
        return len(self.ordered)

    def restrict(self, class_ids: Iterable[int]) -> ClassRanking:
        """Sub-ranking of the given classes, keeping their relative order."""
        keep = set(class_ids)
        ordered = tuple(c for c in self.ordered if c in keep)
        return ClassRanking(ordered, {c: self.scores[c] for c in ordered})

    def top(self) -> int:
        """The most preferred class."""
        return self.ordered[0]


_STATISTICS: Dict[AcsPolicy, Callable[[ClassStats], float]] = {
    AcsPolicy.LOW_CLASS_WEIGHT: lambda s: float(s.class_weight),
    AcsPolicy.LOW_CLUSTER_WEIGHT: lambda s: s.avg_cluster_weight,
    AcsPolicy.LOW_CLUSTER_VARIANCE: lambda s: s.avg_cluster_variance,
    AcsPolicy.HIGH_CLUSTER_VARIANCE: lambda s: s.avg_cluster_variance,
}


def rank_classes(stats: Sequence[ClassStats], policy: AcsPolicy, seed: int) -> ClassRanking:
    """
    Order candidate classes by an ACS policy.

    Classes that were never absorbed come first under every
    statistic-based policy. Remaining ties break by ascending class id.
    ``Uniform`` is a seeded shuffle of the candidates.

    Parameters
    ----------
    stats : sequence of ClassStats
        One entry per candidate class.
    policy : AcsPolicy
        Any policy but ``REDISTRICT`` (see ``redistrict_rank``).
    seed : int
        Seed for the ``Uniform`` shuffle.

    Returns
    -------
    ClassRanking
    """
    if not stats:
        raise ValueError('Cannot rank an empty candidate set')
    if policy == AcsPolicy.REDISTRICT:
        raise ValueError('Redistrict rankings are computed by redistrict_rank')

    class_ids = sorted(s.class_id for s in stats)
    if policy == AcsPolicy.UNIFORM:
        ordered = [int(c) for c in np.random.default_rng(seed).permutation(class_ids)]
        return ClassRanking(tuple(ordered), {c: float(i) for i, c in enumerate(ordered)})

    statistic = _STATISTICS[policy]
    sign = -1.0 if policy == AcsPolicy.HIGH_CLUSTER_VARIANCE else 1.0
    ranked: List[ClassStats] = sorted(stats, key=lambda s: (s.is_seen,
                                                            sign * statistic(s),
                                                            s.class_id))
    ordered = tuple(s.class_id for s in ranked)
    return ClassRanking(ordered, {s.class_id: statistic(s) for s in ranked})
