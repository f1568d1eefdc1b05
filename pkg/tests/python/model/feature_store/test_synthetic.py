import numpy as np
import pytest
from src.fiasco.config.models import SynthConfig
from src.fiasco.model.feature_store import LabeledBatch, gen_synthetic, split_stratified


def make_batch(sizes) -> LabeledBatch:
    labels = np.concatenate([np.full(n, c) for c, n in enumerate(sizes)])
    features = np.arange(labels.size, dtype=float).reshape(-1, 1)
    return LabeledBatch(features, labels)


def test_split_one_class_90_10():
    train, test = split_stratified(make_batch([100]), 0.1, seed=0)
    assert (len(train), len(test)) == (90, 10)


def test_split_two_examples_per_class():
    train, test = split_stratified(make_batch([2, 2, 2]), 0.5, seed=0)
    assert np.bincount(train.labels).tolist() == [1, 1, 1]
    assert np.bincount(test.labels).tolist() == [1, 1, 1]


def test_split_unbalanced_counts():
    train, test = split_stratified(make_batch([20, 37, 55]), 0.1, seed=5)
    assert np.bincount(test.labels).tolist() == [2, 4, 6]
    assert np.bincount(train.labels).tolist() == [18, 33, 49]


def test_split_is_a_partition():
    batch = make_batch([7, 12, 30])
    train, test = split_stratified(batch, 0.2, seed=9)
    values = sorted(train.features[:, 0].tolist() + test.features[:, 0].tolist())
    assert values == batch.features[:, 0].tolist()


def test_split_rejects_singleton_class():
    with pytest.raises(ValueError) as error:
        split_stratified(make_batch([5, 1]), 0.1, seed=0)
    assert 'class 1' in str(error.value)


def test_gen_synthetic_is_deterministic():
    cfg = SynthConfig(class_count=6, dim=5, examples_per_class=12)
    first = gen_synthetic(cfg, seed=11)
    second = gen_synthetic(cfg, seed=11)
    np.testing.assert_array_equal(first.train.features, second.train.features)
    np.testing.assert_array_equal(first.test.labels, second.test.labels)


def test_gen_synthetic_nearest_centroid_separates():
    cfg = SynthConfig(class_count=2, dim=2, clusters_per_class=1, examples_per_class=10,
                      intra_cluster_stddev=0.01, inter_class_separation=100.0)
    for seed in range(5):
        dataset = gen_synthetic(cfg, seed)
        means = dataset.class_means()
        distances = np.linalg.norm(dataset.train.features[:, None, :] - means[None], axis=2)
        assert np.all(np.argmin(distances, axis=1) == dataset.train.labels)


def test_gen_synthetic_degenerate_stddev():
    cfg = SynthConfig(class_count=2, dim=3, clusters_per_class=1, examples_per_class=8,
                      intra_cluster_stddev=1e-12)
    dataset = gen_synthetic(cfg, seed=2)
    for class_id in dataset.classes:
        vectors = dataset.train.of_class(class_id)
        np.testing.assert_allclose(vectors - vectors[0], 0.0, atol=1e-9)


def test_gen_synthetic_counts(small_dataset):
    assert small_dataset.class_count == 8
    assert len(small_dataset.train) + len(small_dataset.test) == 8 * 20
    assert np.bincount(small_dataset.test.labels).tolist() == [2] * 8


def test_restrict_classes(small_dataset):
    restricted = small_dataset.restrict_classes(3)
    assert restricted.class_count == 3
    assert restricted.train.class_ids == [0, 1, 2]
    assert set(restricted.test.labels.tolist()) == {0, 1, 2}
