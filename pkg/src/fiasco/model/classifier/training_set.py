"""Assemble the incremental learner's classifier training set."""

import logging

import numpy as np

from ..cluster_memory import ClusterSpace
from ..feature_store import LabeledBatch
from ...config.models import MemoryTrainSet
from ...util.seeding import Stream, derive_seed

logger = logging.getLogger(__name__)


def build_training_set(space: ClusterSpace,
                       fresh: LabeledBatch,
                       n_p: int,
                       seed: int,
                       memory_train_set: MemoryTrainSet = MemoryTrainSet.BOTH,
                       ) -> LabeledBatch:
    """
    Training examples drawn from memory plus the fresh increment.

    For every known class (ascending id) the memory contributes its
    centroids and/or ``n_p`` pseudo-exemplars, depending on
    ``memory_train_set``; the raw vectors of the current increment are
    appended last.

    Parameters
    ----------
    space : ClusterSpace
        Learner memory.
    fresh : LabeledBatch
        Raw examples received this increment.
    n_p : int
        Pseudo-exemplars per class.
    seed : int
        Seed for pseudo-exemplar sampling.
    memory_train_set : MemoryTrainSet, default BOTH
        Which memory items to include.

    Returns
    -------
    LabeledBatch
    """
    if not space.classes and len(fresh) == 0:
        raise ValueError('Nothing to train on: memory and fresh batch are both empty')

    parts = []
    for class_id in space.class_ids:
        if memory_train_set in (MemoryTrainSet.CENTROIDS, MemoryTrainSet.BOTH):
            centroids = space.centroids(class_id)
            parts.append(LabeledBatch(centroids,
                                      np.full(centroids.shape[0], class_id, dtype=np.int64)))
        if memory_train_set in (MemoryTrainSet.PSEUDO, MemoryTrainSet.BOTH):
            class_seed = derive_seed(seed, Stream.PSEUDO_EXEMPLARS, class_id)
            parts.append(space.generate_pseudo_exemplars(class_id, n_p, class_seed))
    parts.append(fresh)
    training_set = LabeledBatch.concat(parts, dim=space.dim)
    logger.debug(f'Training set: {len(training_set) - len(fresh)} memory items, '
                 f'{len(fresh)} fresh')
    return training_set
