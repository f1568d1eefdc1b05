"""The two learners compared in an experiment: FIASco and the batch SVM baseline."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import List, Sequence

import numpy as np

from ..class_selection import ClassRanking, rank_classes, redistrict_rank
from ..classifier import LinearClassifier, build_training_set, fit
from ..cluster_memory import ClassStats, ClusterSpace
from ..feature_store import LabeledBatch
from ...config.models import AcsPolicy, LearnerKind, MethodSpec, TrainConfig
from ...util.seeding import Stream, derive_seed

logger = logging.getLogger(__name__)


class Learner(ABC):
    """
    A learner receiving batches of labeled examples between intervals.

    Parameters
    ----------
    method : MethodSpec
        Learner kind, ACS policy and force split.
    env_classes : sequence of int
        Classes present in the environment.
    dim : int
        Feature dimension.
    train_cfg : TrainConfig
        Classifier settings.
    seed : int
        Run seed.
    """

    def __init__(self, method: MethodSpec, env_classes: Sequence[int], dim: int,
                 train_cfg: TrainConfig, seed: int):
        self.method = method
        self.env_classes = sorted(env_classes)
        self.dim = dim
        self.train_cfg = train_cfg
        self.seed = seed
        self.classifier = LinearClassifier.constant(self.env_classes[0], dim)
        self.train_points = 0
        self.ranking = self._rank_stats(self.class_stats(), increment=0)

    @abstractmethod
    def class_stats(self) -> List[ClassStats]:
        """Statistics of every environment class."""

    @abstractmethod
    def _train(self, batch: LabeledBatch, increment: int) -> LabeledBatch:
        """Store ``batch`` and return the classifier's training set."""

    def _rank_stats(self, stats: List[ClassStats], increment: int) -> ClassRanking:
        policy = self.method.acs
        if policy == AcsPolicy.REDISTRICT:
            # without stored data every class is unseen
            policy = AcsPolicy.LOW_CLASS_WEIGHT
        return rank_classes(stats, policy, derive_seed(self.seed, Stream.RANKING, increment))

    def rank(self, batch: LabeledBatch, increment: int) -> ClassRanking:
        """Ranking after learning ``batch``."""
        return self._rank_stats(self.class_stats(), increment)

    def learn(self, batch: LabeledBatch, increment: int) -> None:
        """
        Learn from a batch, retrain the classifier and re-rank the classes.

        Parameters
        ----------
        batch : LabeledBatch
            Non-empty batch of new examples.
        increment : int
            Current increment, mixed into the sampling seeds.
        """
        training_set = self._train(batch, increment)
        cfg = self.train_cfg.copy(update={'seed': derive_seed(self.train_cfg.seed,
                                                              Stream.TRAINING, increment)})
        self.classifier = fit(training_set, cfg)
        self.train_points = len(training_set)
        self.ranking = self.rank(batch, increment)


class FiascoLearner(Learner):
    """Incremental learner keeping only a cluster space."""

    def __init__(self, method: MethodSpec, env_classes: Sequence[int], dim: int,
                 train_cfg: TrainConfig, seed: int, distance_threshold: float, n_p: int,
                 diagonal_covariance: bool = False):
        self.space = ClusterSpace(distance_threshold, dim, diagonal_covariance)
        self.n_p = n_p
        super().__init__(method, env_classes, dim, train_cfg, seed)

    def class_stats(self) -> List[ClassStats]:
        return self.space.stats_for(self.env_classes)

    def _train(self, batch: LabeledBatch, increment: int) -> LabeledBatch:
        report = self.space.absorb_batch(batch)
        logger.debug(f'Cluster space: {self.space.cluster_count} clusters, '
                     f'{report.clusters_created} new')
        return build_training_set(self.space, batch, self.n_p,
                                  derive_seed(self.seed, Stream.PSEUDO_EXEMPLARS, increment),
                                  self.method.memory_train_set)


class BatchLearner(Learner):
    """Baseline storing every raw example and retraining from scratch."""

    def __init__(self, method: MethodSpec, env_classes: Sequence[int], dim: int,
                 train_cfg: TrainConfig, seed: int):
        self.stored = LabeledBatch.empty(dim)
        self._previous = self.stored
        super().__init__(method, env_classes, dim, train_cfg, seed)

    def class_stats(self) -> List[ClassStats]:
        # the raw store acts as one cluster per class
        stats = []
        for class_id in self.env_classes:
            features = self.stored.of_class(class_id)
            n = features.shape[0]
            if n == 0:
                stats.append(ClassStats.unseen(class_id))
                continue
            variance = float(np.mean(np.var(features, axis=0, ddof=1))) if n > 1 else 0.0
            stats.append(ClassStats(class_id, n, float(n), variance, cluster_count=1))
        return stats

    def _train(self, batch: LabeledBatch, increment: int) -> LabeledBatch:
        self._previous = self.stored
        self.stored = LabeledBatch.concat([self.stored, batch])
        return self.stored

    def rank(self, batch: LabeledBatch, increment: int) -> ClassRanking:
        if self.method.acs != AcsPolicy.REDISTRICT or len(self._previous) == 0:
            return super().rank(batch, increment)
        volatility = redistrict_rank(self._previous, batch, self.method.redistrict_folds,
                                     derive_seed(self.seed, Stream.REDISTRICT, increment),
                                     self.train_cfg)
        seen = set(self.stored.class_ids)
        unseen = [c for c in self.env_classes if c not in seen]
        ordered = tuple(unseen) + tuple(c for c in volatility.ordered if c in self.env_classes)
        scores = {c: 0.0 for c in unseen}
        scores.update({c: volatility.scores[c] for c in ordered if c in volatility.scores})
        return ClassRanking(ordered, scores)


def make_learner(method: MethodSpec, env_classes: Sequence[int], dim: int,
                 train_cfg: TrainConfig, seed: int, distance_threshold: float, n_p: int,
                 diagonal_covariance: bool = False) -> Learner:
    """Construct the learner named by ``method.learner``."""
    if method.learner == LearnerKind.FIASCO:
        return FiascoLearner(method, env_classes, dim, train_cfg, seed,
                             distance_threshold, n_p, diagonal_covariance)
    return BatchLearner(method, env_classes, dim, train_cfg, seed)
