import numpy as np
import pytest
from src.fiasco.model.cluster_memory import ClassMemory, Cluster, ClusterSpace
from src.fiasco.model.feature_store import LabeledBatch


def test_first_example_creates_cluster():
    space = ClusterSpace(distance_threshold=1.0, dim=2)
    report = space.absorb(0, [np.array([0.0, 0.0])])
    cluster = space.classes[0].clusters[0]
    assert report.clusters_created == 1
    assert cluster.centroid.tolist() == [0.0, 0.0]
    assert cluster.weight == 1
    assert cluster.scalar_variance == 0.0


def test_threshold_exceeded_creates_second_cluster():
    space = ClusterSpace(distance_threshold=1.0, dim=2)
    space.absorb(0, [np.array([0.0, 0.0]), np.array([10.0, 0.0])])
    assert len(space.classes[0].clusters) == 2


def test_close_vector_updates_cluster():
    space = ClusterSpace(distance_threshold=1.0, dim=2)
    report = space.absorb(0, [np.array([0.0, 0.0]), np.array([0.5, 0.0])])
    assert report.clusters_updated == 1
    cluster = space.classes[0].clusters[0]
    assert cluster.weight == 2
    assert cluster.centroid.tolist() == [0.25, 0.0]
    # per-dimension variances (0.125, 0) averaged
    assert cluster.scalar_variance == pytest.approx(0.0625)


def test_distance_tie_goes_to_lowest_cluster():
    space = ClusterSpace(distance_threshold=3.0, dim=1)
    space.absorb(0, [np.array([0.0]), np.array([4.0]), np.array([2.0])])
    weights = [c.weight for c in space.classes[0].clusters]
    assert weights == [2, 1]


def test_benchmark_thresholds_accepted():
    rng = np.random.default_rng(0)
    for threshold in (17.0, 15.0):
        space = ClusterSpace(threshold, dim=8)
        space.absorb(3, rng.normal(0, 5, size=(20, 8)))
        assert space.class_stats(3).class_weight == 20


def test_dimension_mismatch():
    space = ClusterSpace(1.0, dim=2)
    with pytest.raises(ValueError):
        space.absorb(0, [np.zeros(3)])


def test_class_stats_of_unknown_class():
    with pytest.raises(KeyError):
        ClusterSpace(1.0, dim=2).class_stats(4)


def test_class_stats_single_cluster():
    space = ClusterSpace(1.0, dim=2)
    space.absorb(1, [np.array([1.0, 1.0])])
    stats = space.class_stats(1)
    assert stats.avg_cluster_weight == 1.0
    assert stats.avg_cluster_variance == 0.0


def test_class_stats_weights_two_and_four():
    space = ClusterSpace(1.0, dim=2)
    space.absorb(0, [np.array([0.0, 0.0]), np.array([0.0, 0.1])])
    space.absorb(0, [np.array([10.0, 0.0])] * 4)
    stats = space.class_stats(0)
    assert stats.class_weight == 6
    assert stats.avg_cluster_weight == 3.0
    assert stats.cluster_count == 2


def test_worked_example_class_stats(worked_example_space: ClusterSpace):
    a = worked_example_space.class_stats(0)
    b = worked_example_space.class_stats(1)
    assert a.class_weight == 4
    assert a.avg_cluster_weight == 4.0
    assert a.avg_cluster_variance == pytest.approx(0.5)
    assert b.class_weight == 7
    assert b.avg_cluster_weight == 3.5
    assert b.avg_cluster_variance == pytest.approx(1.3)


def test_stats_for_marks_unseen_classes():
    space = ClusterSpace(1.0, dim=1)
    space.absorb(2, [np.array([0.0])])
    stats = space.stats_for([0, 2])
    assert [s.is_seen for s in stats] == [False, True]


def test_streaming_variance_equals_two_pass():
    rng = np.random.default_rng(42)
    for _ in range(1000):
        length = int(rng.integers(2, 201))
        dim = int(rng.integers(1, 65))
        vectors = rng.normal(rng.uniform(-5, 5), rng.uniform(0.1, 3), size=(length, dim))
        cluster = Cluster(vectors[0])
        for x in vectors[1:]:
            cluster.absorb(x)
        expected = float(np.mean(np.var(vectors, axis=0, ddof=1)))
        assert abs(cluster.scalar_variance - expected) <= 1e-9 * max(1.0, expected)
        np.testing.assert_allclose(cluster.centroid, vectors.mean(axis=0), atol=1e-9)


def test_covariance_matches_numpy():
    vectors = np.random.default_rng(3).normal(size=(30, 4))
    cluster = Cluster(vectors[0])
    for x in vectors[1:]:
        cluster.absorb(x)
    np.testing.assert_allclose(cluster.sample_covariance(), np.cov(vectors, rowvar=False),
                               atol=1e-9)


def test_diagonal_covariance_matches_variances():
    vectors = np.random.default_rng(4).normal(size=(25, 3))
    cluster = Cluster(vectors[0], diagonal=True)
    for x in vectors[1:]:
        cluster.absorb(x)
    assert cluster.covariance.shape == (3,)
    np.testing.assert_allclose(np.diag(cluster.sample_covariance()),
                               np.var(vectors, axis=0, ddof=1), atol=1e-9)


def test_clustering_invariants_over_permutations():
    rng = np.random.default_rng(7)
    threshold = 1.5
    for _ in range(100):
        vectors = rng.uniform(0.0, 3.0, size=(int(rng.integers(2, 40)), 3))
        for _ in range(10):
            space = ClusterSpace(threshold, dim=3)
            report = space.absorb(0, rng.permutation(vectors))
            assert report.max_insertion_distance <= threshold
            assert space.total_weight == len(vectors)
            for cluster in space.classes[0].clusters:
                cov = cluster.sample_covariance()
                np.testing.assert_allclose(cov, cov.T, atol=1e-9)
                assert np.linalg.eigvalsh(cov).min() >= -1e-8


def test_pseudo_exemplars_of_weight_one_cluster_are_centroids():
    space = ClusterSpace(1.0, dim=3)
    space.absorb(0, [np.array([1.0, 2.0, 3.0])])
    batch = space.generate_pseudo_exemplars(0, 4, seed=0)
    assert np.all(batch.features == np.array([1.0, 2.0, 3.0]))
    assert batch.labels.tolist() == [0] * 4


def test_pseudo_exemplar_count_and_allocation():
    space = ClusterSpace(1.0, dim=2)
    space.absorb(5, [np.array([0.0, 0.0])])
    space.absorb(5, [np.array([9.0, 9.0]), np.array([9.5, 9.0]), np.array([9.0, 9.5])])
    batch = space.generate_pseudo_exemplars(5, 5, seed=1)
    assert len(batch) == 5
    # weights 1 and 3: largest remainder gives 1 and 4
    assert int(np.sum(np.all(batch.features == 0.0, axis=1))) == 1


def test_pseudo_exemplars_deterministic_per_seed():
    space = ClusterSpace(10.0, dim=2)
    space.absorb(0, np.random.default_rng(0).normal(size=(10, 2)))
    first = space.generate_pseudo_exemplars(0, 6, seed=9)
    second = space.generate_pseudo_exemplars(0, 6, seed=9)
    np.testing.assert_array_equal(first.features, second.features)


def test_pseudo_exemplar_mean_converges_to_centroid():
    vectors = np.random.default_rng(2).normal(0.0, 2.0, size=(50, 3))
    space = ClusterSpace(1e6, dim=3)
    space.absorb(0, vectors)
    cluster = space.classes[0].clusters[0]
    batch = space.generate_pseudo_exemplars(0, 10000, seed=3)
    stddev = np.sqrt(np.diag(cluster.sample_covariance()))
    assert np.all(np.abs(batch.features.mean(axis=0) - cluster.centroid) < 0.05 * stddev)


def test_pseudo_exemplar_errors():
    space = ClusterSpace(1.0, dim=1)
    space.absorb(0, [np.array([0.0])])
    with pytest.raises(ValueError):
        space.generate_pseudo_exemplars(0, 0, seed=0)
    with pytest.raises(KeyError):
        space.generate_pseudo_exemplars(1, 3, seed=0)


def test_absorb_batch_conserves_weight(small_dataset):
    space = ClusterSpace(4.0, dim=small_dataset.dim)
    space.absorb_batch(small_dataset.train)
    assert space.total_weight == len(small_dataset.train)
    for class_id in small_dataset.classes:
        expected = int(np.sum(small_dataset.train.labels == class_id))
        assert space.class_stats(class_id).class_weight == expected


def test_checkpoint_restores_statistics(worked_example_space: ClusterSpace):
    restored = ClusterSpace.from_json(worked_example_space.to_json())
    assert restored.class_ids == [0, 1]
    assert restored.class_stats(1) == worked_example_space.class_stats(1)
    np.testing.assert_array_equal(
        restored.generate_pseudo_exemplars(1, 5, seed=0).features,
        worked_example_space.generate_pseudo_exemplars(1, 5, seed=0).features)


def test_checkpoint_version_checked(worked_example_space: ClusterSpace):
    document = worked_example_space.to_dict()
    document['format_version'] = 99
    with pytest.raises(ValueError):
        ClusterSpace.from_dict(document)


def test_labeled_batch_is_read_only():
    batch = LabeledBatch(np.zeros((2, 2)), [0, 1])
    with pytest.raises(ValueError):
        batch.features[0, 0] = 1.0


def test_class_memory_weight():
    memory = ClassMemory(0, [Cluster(np.zeros(1), weight=2), Cluster(np.ones(1), weight=5)])
    assert memory.class_weight == 7
