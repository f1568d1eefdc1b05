"""Enumerations shared by the config models and the domain model."""

from enum import Enum
from typing import Tuple


class AcsPolicy(str, Enum):
    """Active class selection ordering."""

    LOW_CLASS_WEIGHT = 'low-class-weight'
    LOW_CLUSTER_WEIGHT = 'low-cluster-weight'
    LOW_CLUSTER_VARIANCE = 'low-cluster-var'
    HIGH_CLUSTER_VARIANCE = 'high-cluster-var'
    UNIFORM = 'uniform'
    REDISTRICT = 'redistrict'


class ForceSplit(str, Enum):
    """Force per rank quartile (negative attracts, positive repels)."""

    ATTRACT_REPULSE = 'attract-repulse'
    ATTRACT_IGNORE = 'attract-ignore'
    MOD1 = 'mod1'
    MOD2 = 'mod2'
    MOD3 = 'mod3'
    ATTRACT_ONLY = 'attract-only'

    @property
    def forces(self) -> Tuple[float, float, float, float]:
        """Forces for quartiles Q1..Q4."""
        return _FORCE_SPLITS[self]


_FORCE_SPLITS = {
    ForceSplit.ATTRACT_REPULSE: (-20.0, -10.0, 10.0, 20.0),
    ForceSplit.ATTRACT_IGNORE: (-20.0, -10.0, 0.0, 0.0),
    ForceSplit.MOD1: (-20.0, -10.0, 5.0, 5.0),
    ForceSplit.MOD2: (-20.0, -10.0, -5.0, -5.0),
    ForceSplit.MOD3: (-20.0, -10.0, -10.0, -10.0),
    ForceSplit.ATTRACT_ONLY: (-20.0, -20.0, -20.0, -20.0),
}


class LabelMode(str, Enum):
    """How the agent labels distal objects."""

    ORACLE = 'oracle'
    PREDICTED = 'predicted'


class EscapeMode(str, Enum):
    """How a stuck agent returns to the start cell."""

    RESET = 'reset'
    WALK = 'walk'


class LearnerKind(str, Enum):
    """Incremental cluster learner or batch baseline."""

    FIASCO = 'fiasco'
    BATCH_SVM = 'batch-svm'


class MemoryTrainSet(str, Enum):
    """Which memory items the incremental learner trains its classifier on."""

    CENTROIDS = 'centroids'
    PSEUDO = 'pseudo'
    BOTH = 'both'
