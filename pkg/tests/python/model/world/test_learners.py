import numpy as np
from src.fiasco.config.models import AcsPolicy, LearnerKind, MethodSpec, TrainConfig
from src.fiasco.model.feature_store import FeatureDataset, LabeledBatch
from src.fiasco.model.world import BatchLearner, FiascoLearner, make_learner

_CLASSES = [0, 1, 2, 3]


def _batch(dataset: FeatureDataset, class_id: int, count: int) -> LabeledBatch:
    return dataset.train.subset(dataset.train_indices_of(class_id)[:count])


def test_initial_classifier_is_constant(small_dataset: FeatureDataset):
    learner = make_learner(MethodSpec(), _CLASSES, small_dataset.dim, TrainConfig(), 0, 4.0, 3)
    assert isinstance(learner, FiascoLearner)
    assert learner.classifier.class_ids == (0,)
    assert learner.train_points == 0
    assert learner.ranking.ordered == (0, 1, 2, 3)


def test_fiasco_learner_prefers_unseen_classes(small_dataset: FeatureDataset):
    learner = make_learner(MethodSpec(), _CLASSES, small_dataset.dim, TrainConfig(), 0, 4.0, 3)
    learner.learn(LabeledBatch.concat([_batch(small_dataset, 1, 5),
                                       _batch(small_dataset, 2, 5)]), 1)
    assert learner.ranking.ordered[:2] == (0, 3)
    assert learner.classifier.class_ids == (1, 2)
    # centroids plus 3 pseudo-exemplars per known class plus the fresh batch
    assert learner.train_points == learner.space.cluster_count + 2 * 3 + 10


def test_fiasco_learner_single_class_batch(small_dataset: FeatureDataset):
    learner = make_learner(MethodSpec(), _CLASSES, small_dataset.dim, TrainConfig(), 0, 4.0, 3)
    learner.learn(_batch(small_dataset, 2, 4), 1)
    assert learner.classifier.class_ids == (2,)


def test_batch_learner_stores_raw_examples(small_dataset: FeatureDataset):
    method = MethodSpec(learner=LearnerKind.BATCH_SVM, acs=AcsPolicy.LOW_CLASS_WEIGHT)
    learner = make_learner(method, _CLASSES, small_dataset.dim, TrainConfig(), 0, 4.0, 3)
    assert isinstance(learner, BatchLearner)
    learner.learn(_batch(small_dataset, 0, 6), 1)
    learner.learn(_batch(small_dataset, 1, 2), 2)
    assert learner.train_points == 8
    stats = {s.class_id: s for s in learner.class_stats()}
    assert stats[0].class_weight == 6
    assert stats[1].class_weight == 2
    assert not stats[3].is_seen
    assert learner.ranking.ordered[:2] == (2, 3)


def test_uniform_ranking_is_seeded(small_dataset: FeatureDataset):
    method = MethodSpec(learner=LearnerKind.BATCH_SVM, acs=AcsPolicy.UNIFORM)
    a = make_learner(method, _CLASSES, small_dataset.dim, TrainConfig(), 4, 4.0, 3)
    b = make_learner(method, _CLASSES, small_dataset.dim, TrainConfig(), 4, 4.0, 3)
    assert a.ranking.ordered == b.ranking.ordered
    assert sorted(a.ranking.ordered) == _CLASSES


def test_redistrict_puts_unseen_classes_first(small_dataset: FeatureDataset):
    method = MethodSpec(learner=LearnerKind.BATCH_SVM, acs=AcsPolicy.REDISTRICT)
    learner = make_learner(method, _CLASSES, small_dataset.dim, TrainConfig(epochs=5), 0, 4.0, 3)
    learner.learn(LabeledBatch.concat([_batch(small_dataset, 0, 6),
                                       _batch(small_dataset, 1, 6)]), 1)
    learner.learn(_batch(small_dataset, 1, 3), 2)
    assert learner.ranking.ordered[:2] == (2, 3)
    assert sorted(learner.ranking.ordered) == _CLASSES
    assert np.isfinite(list(learner.ranking.scores.values())).all()
