import numpy as np
import pytest
from src.fiasco.config.models import MemoryTrainSet
from src.fiasco.model.classifier import build_training_set
from src.fiasco.model.cluster_memory import ClusterSpace
from src.fiasco.model.feature_store import LabeledBatch


@pytest.fixture
def fresh() -> LabeledBatch:
    return LabeledBatch(np.array([[2.0], [3.0]]), [2, 2])


def test_memory_and_fresh_combined(worked_example_space: ClusterSpace, fresh: LabeledBatch):
    training_set = build_training_set(worked_example_space, fresh, n_p=5, seed=0)
    # 3 centroids, 5 pseudo-exemplars for each of the 2 classes, 2 fresh
    assert len(training_set) == 3 + 10 + 2
    np.testing.assert_array_equal(training_set.features[-2:], fresh.features)
    assert list(training_set.labels[:6]) == [0] * 6
    assert sorted(set(training_set.labels.tolist())) == [0, 1, 2]


@pytest.mark.parametrize('mode, expected', [
    (MemoryTrainSet.CENTROIDS, 3),
    (MemoryTrainSet.PSEUDO, 10),
    (MemoryTrainSet.BOTH, 13),
])
def test_memory_train_set_modes(worked_example_space: ClusterSpace, mode, expected):
    training_set = build_training_set(worked_example_space, LabeledBatch.empty(1), n_p=5,
                                      seed=0, memory_train_set=mode)
    assert len(training_set) == expected


def test_empty_memory_yields_fresh_only(fresh: LabeledBatch):
    training_set = build_training_set(ClusterSpace(2.0, dim=1), fresh, n_p=5, seed=0)
    np.testing.assert_array_equal(training_set.features, fresh.features)


def test_nothing_to_train_on():
    with pytest.raises(ValueError):
        build_training_set(ClusterSpace(2.0, dim=1), LabeledBatch.empty(1), n_p=5, seed=0)


def test_same_seed_same_training_set(worked_example_space: ClusterSpace, fresh: LabeledBatch):
    a = build_training_set(worked_example_space, fresh, n_p=5, seed=4)
    b = build_training_set(worked_example_space, fresh, n_p=5, seed=4)
    np.testing.assert_array_equal(a.features, b.features)
