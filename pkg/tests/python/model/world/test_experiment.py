import pytest
from src.fiasco.config.models import (AcsPolicy, LabelMode, LearnerKind, MethodSpec, TrainConfig,
                                      WorldConfig)
from src.fiasco.model.feature_store import FeatureDataset
from src.fiasco.model.world import run_experiment

_TIMING = ['train_millis']


def _run(dataset: FeatureDataset, cfg: WorldConfig, method: MethodSpec = MethodSpec(),
         seed: int = 1):
    return run_experiment(dataset, cfg, method, n_p=3, distance_threshold=4.0,
                          train_cfg=TrainConfig(epochs=10), seed=seed)


def test_no_intervals_gives_initial_row(small_dataset: FeatureDataset,
                                        small_world_config: WorldConfig):
    cfg = small_world_config.copy(update={'num_intervals': 0})
    timeline = _run(small_dataset, cfg)
    assert len(timeline) == 1
    row = timeline.rows[0]
    assert (row.increment, row.train_points, row.harvested) == (0, 0, 0)
    # a constant model over 8 balanced classes
    assert row.accuracy == pytest.approx(1 / 8)


def test_rows_per_increment(small_dataset: FeatureDataset, small_world_config: WorldConfig):
    timeline = _run(small_dataset, small_world_config)
    assert [r.increment for r in timeline.rows] == [0, 1, 2, 3]
    assert len(timeline.explorations) == 3
    harvested = [r.harvested for r in timeline.rows]
    assert harvested == sorted(harvested)
    assert harvested[-1] > 0
    assert all(0.0 <= r.accuracy <= 1.0 for r in timeline.rows)


def test_runs_are_reproducible(small_dataset: FeatureDataset, small_world_config: WorldConfig):
    first = _run(small_dataset, small_world_config, seed=4).to_df().drop(columns=_TIMING)
    second = _run(small_dataset, small_world_config, seed=4).to_df().drop(columns=_TIMING)
    assert first.equals(second)


def test_batch_learner_trains_on_everything_harvested(small_dataset: FeatureDataset,
                                                      small_world_config: WorldConfig):
    method = MethodSpec(learner=LearnerKind.BATCH_SVM, acs=AcsPolicy.UNIFORM)
    timeline = _run(small_dataset, small_world_config, method)
    assert timeline.rows[-1].harvested > 0
    for row in timeline.rows:
        assert row.train_points == row.harvested


def test_fiasco_memory_stays_bounded(small_dataset: FeatureDataset,
                                     small_world_config: WorldConfig):
    cfg = small_world_config.copy(update={'num_intervals': 5})
    timeline = _run(small_dataset, cfg)
    assert timeline.rows[-1].harvested > 0
    for training in timeline.trainings:
        # centroids and pseudo-exemplars of 8 classes plus one fresh interval
        assert training.train_points <= len(small_dataset.train) + 8 * 3
    assert len(timeline.trainings) <= 5


def test_predicted_mode_requests_and_sparse_evaluation(small_dataset: FeatureDataset):
    cfg = WorldConfig(width=30, height=30, containers_per_building=4, d_far=8.0,
                      label_mode=LabelMode.PREDICTED, request_size=10, num_intervals=6)
    timeline = _run(small_dataset, cfg)
    assert [r.increment for r in timeline.rows] == [0, 3, 6]
    assert timeline.rows[0].harvested == 8
    assert timeline.rows[0].train_points > 0
    for exploration in timeline.explorations:
        assert 0 <= exploration.harvested <= 10
