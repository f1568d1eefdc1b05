from collections import Counter

import numpy as np
import pytest
from src.fiasco.config.models import AcsPolicy
from src.fiasco.model.class_selection import ClassRanking, rank_classes
from src.fiasco.model.cluster_memory import ClassStats

A, B = 0, 1
# class A: weight 4, one cluster, variance 0.5; class B: weight 7, two clusters, variance 1.3
WORKED_EXAMPLE = [ClassStats(A, 4, 4.0, 0.5, 1), ClassStats(B, 7, 3.5, 1.3, 2)]


@pytest.mark.parametrize('policy, expected', [
    (AcsPolicy.LOW_CLASS_WEIGHT, (A, B)),
    (AcsPolicy.LOW_CLUSTER_WEIGHT, (B, A)),
    (AcsPolicy.LOW_CLUSTER_VARIANCE, (A, B)),
    (AcsPolicy.HIGH_CLUSTER_VARIANCE, (B, A)),
])
def test_worked_example_rankings(policy: AcsPolicy, expected):
    assert rank_classes(WORKED_EXAMPLE, policy, seed=0).ordered == expected


def test_worked_example_from_cluster_space(worked_example_space):
    stats = worked_example_space.stats_for([0, 1])
    assert rank_classes(stats, AcsPolicy.LOW_CLASS_WEIGHT, 0).ordered == (A, B)
    assert rank_classes(stats, AcsPolicy.HIGH_CLUSTER_VARIANCE, 0).ordered == (B, A)


def test_ties_break_by_class_id():
    stats = [ClassStats(c, 5, 5.0, 1.0, 1) for c in (3, 1, 2)]
    assert rank_classes(stats, AcsPolicy.LOW_CLASS_WEIGHT, 0).ordered == (1, 2, 3)


@pytest.mark.parametrize('policy', [AcsPolicy.LOW_CLASS_WEIGHT, AcsPolicy.LOW_CLUSTER_WEIGHT,
                                    AcsPolicy.LOW_CLUSTER_VARIANCE,
                                    AcsPolicy.HIGH_CLUSTER_VARIANCE])
def test_unseen_classes_rank_first(policy: AcsPolicy):
    stats = [ClassStats(0, 1, 1.0, 0.0, 1), ClassStats.unseen(4), ClassStats(2, 9, 9.0, 4.0, 1)]
    assert rank_classes(stats, policy, 0).ordered[0] == 4


@pytest.mark.parametrize('policy, sign', [(AcsPolicy.LOW_CLASS_WEIGHT, 1),
                                          (AcsPolicy.LOW_CLUSTER_VARIANCE, 1),
                                          (AcsPolicy.HIGH_CLUSTER_VARIANCE, -1)])
def test_scores_monotone_and_shift_invariant(policy: AcsPolicy, sign: int):
    rng = np.random.default_rng(0)
    stats = [ClassStats(c, int(rng.integers(1, 50)), float(rng.uniform(1, 5)),
                        float(rng.uniform(0, 3)), 1) for c in range(20)]
    ranking = rank_classes(stats, policy, 0)
    assert sorted(ranking.ordered) == list(range(20))
    keys = [sign * ranking.scores[c] for c in ranking.ordered]
    assert keys == sorted(keys)

    shifted = [ClassStats(s.class_id, s.class_weight + 10, s.avg_cluster_weight + 10,
                          s.avg_cluster_variance + 10, 1) for s in stats]
    assert rank_classes(shifted, policy, 0).ordered == ranking.ordered


def test_uniform_is_deterministic_per_seed():
    stats = [ClassStats.unseen(c) for c in range(10)]
    first = rank_classes(stats, AcsPolicy.UNIFORM, seed=5)
    assert first == rank_classes(stats, AcsPolicy.UNIFORM, seed=5)
    assert sorted(first.ordered) == list(range(10))


def test_uniform_first_place_frequency():
    k, trials = 5, 10000
    stats = [ClassStats.unseen(c) for c in range(k)]
    counts = Counter(rank_classes(stats, AcsPolicy.UNIFORM, seed).top() for seed in range(trials))
    p = 1 / k
    sigma = np.sqrt(trials * p * (1 - p))
    for class_id in range(k):
        assert abs(counts[class_id] - trials * p) <= 3 * sigma


def test_empty_candidates_rejected():
    with pytest.raises(ValueError):
        rank_classes([], AcsPolicy.LOW_CLASS_WEIGHT, 0)


def test_redistrict_policy_rejected():
    with pytest.raises(ValueError):
        rank_classes(WORKED_EXAMPLE, AcsPolicy.REDISTRICT, 0)


def test_restrict_keeps_order():
    ranking = ClassRanking((3, 0, 2, 1), {0: 0.0, 1: 1.0, 2: 2.0, 3: 3.0})
    assert ranking.restrict({1, 3}).ordered == (3, 1)
