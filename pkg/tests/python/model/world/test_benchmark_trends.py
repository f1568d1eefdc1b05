from typing import Dict, List

import numpy as np
import pytest
from src.fiasco.config.models import LearnerKind, RunSpec, SynthConfig, TrainConfig
from src.fiasco.model.feature_store import gen_synthetic
from src.fiasco.model.run_stats import MetricsTimeline
from src.fiasco.model.world import run_experiment

_SEEDS = [0, 1]


@pytest.fixture(scope='module')
def default_spec() -> RunSpec:
    return RunSpec(train=TrainConfig(epochs=10), seeds=_SEEDS)


@pytest.fixture(scope='module')
def timelines(default_spec: RunSpec) -> Dict[LearnerKind, List[MetricsTimeline]]:
    """Default methods on the default synthetic dataset and world."""
    dataset = gen_synthetic(SynthConfig(), seed=0)
    runs = {}
    for method in default_spec.methods:
        runs[method.learner] = [
            run_experiment(dataset, default_spec.world, method, default_spec.n_p,
                           default_spec.distance_threshold, default_spec.train, seed)
            for seed in default_spec.seeds
        ]
    return runs


def test_every_run_harvests(timelines):
    for runs in timelines.values():
        for timeline in runs:
            assert len(timeline) == 31
            assert timeline.rows[-1].harvested > 0


def test_batch_memory_grows_with_harvest(timelines):
    for timeline in timelines[LearnerKind.BATCH_SVM]:
        points = [r.train_points for r in timeline.rows]
        assert points == sorted(points)
        assert points[-1] == timeline.rows[-1].harvested


def test_fiasco_memory_is_bounded(timelines, default_spec: RunSpec):
    # centroids (a generous per-class cap) and pseudo-exemplars of 40 classes
    memory_cap = 40 * (15 + default_spec.n_p)
    for timeline in timelines[LearnerKind.FIASCO]:
        largest_interval = max(e.harvested for e in timeline.explorations)
        for row in timeline.rows:
            assert row.train_points <= memory_cap + largest_interval


def test_low_class_weight_keeps_up_with_uniform_batch(timelines):
    fiasco = np.mean([t.avg_inc_accuracy for t in timelines[LearnerKind.FIASCO]])
    batch = np.mean([t.avg_inc_accuracy for t in timelines[LearnerKind.BATCH_SVM]])
    assert fiasco >= batch - 0.01
    assert min(fiasco, batch) > 10 / 40
