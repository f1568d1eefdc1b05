"""Redistricting baseline: rank classes by prediction volatility."""

import logging
from typing import Dict, List

import numpy as np
from sklearn.model_selection import KFold

from .ranking import ClassRanking
from ..classifier import fit
from ..feature_store import LabeledBatch
from ...config.models import TrainConfig

logger = logging.getLogger(__name__)


def redistrict_rank(stored: LabeledBatch,
                    recent: LabeledBatch,
                    folds: int,
                    seed: int,
                    train_cfg: TrainConfig) -> ClassRanking:
    """
    Rank classes by how many held-out predictions the recent examples flip.

    ``stored`` is split into ``folds`` seeded folds. For every fold, one
    model is trained on the other folds and one on the other folds plus
    ``recent``; the volatility of a class is the fraction of its held-out
    examples whose prediction differs between the two, averaged over the
    folds that hold the class. Both models are trained from scratch.

    Parameters
    ----------
    stored : LabeledBatch
        Raw examples kept by the batch learner before this increment.
    recent : LabeledBatch
        Examples received this increment.
    folds : int
        Number of cross-validation folds, at least 2.
    seed : int
        Fold split seed.
    train_cfg : TrainConfig
        Classifier settings for every retrain.

    Returns
    -------
    ClassRanking
        Classes of ``stored`` and ``recent``, most volatile first, ties
        by ascending id. Classes with fewer than ``folds`` stored
        examples have volatility 0.
    """
    if len(stored) == 0:
        raise ValueError('Redistricting needs stored examples')
    if folds < 2:
        raise ValueError(f'folds must be at least 2, got {folds}')

    candidates = sorted(set(stored.class_ids) | set(recent.class_ids))
    counts = {c: int(np.sum(stored.labels == c)) for c in candidates}
    flips: Dict[int, List[float]] = {c: [] for c in candidates}

    if len(recent) and len(stored) >= folds:
        splitter = KFold(n_splits=folds, shuffle=True, random_state=seed)
        for train_idx, held_idx in splitter.split(stored.features):
            base = stored.subset(train_idx)
            held = stored.subset(held_idx)
            before = fit(base, train_cfg).predict_batch(held.features)
            after = fit(LabeledBatch.concat([base, recent]), train_cfg).predict_batch(held.features)
            changed = before != after
            for class_id in held.class_ids:
                mask = held.labels == class_id
                flips[class_id].append(float(np.mean(changed[mask])))

    volatility = {c: float(np.mean(flips[c])) if flips[c] and counts[c] >= folds else 0.0
                  for c in candidates}
    ordered = tuple(sorted(candidates, key=lambda c: (-volatility[c], c)))
    logger.debug(f'Redistrict volatility: {volatility}')
    return ClassRanking(ordered, volatility)
