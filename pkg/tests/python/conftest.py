from pathlib import Path
from typing import Dict

import numpy as np
import pytest
from src.fiasco.config.models import SynthConfig, WorldConfig
from src.fiasco.model.cluster_memory import ClassMemory, Cluster, ClusterSpace
from src.fiasco.model.feature_store import FeatureDataset, LabeledBatch, gen_synthetic
from src.fiasco.util.io import read_yaml_file

_HERE = Path(__file__).parent
_CONFIG_DIR = _HERE / '../test_data/run_configs/'


@pytest.fixture(scope='session')
def test_data_dir() -> Path:
    """Return Path of the folder containing the test data files."""
    return _HERE.parent / 'test_data'


@pytest.fixture(scope='session')
def small_run_config_path() -> Path:
    return _CONFIG_DIR / 'small.yml'


@pytest.fixture(scope='function')
def small_run_config() -> Dict:
    return read_yaml_file(_CONFIG_DIR / 'small.yml')


@pytest.fixture(scope='session')
def small_synth_config() -> SynthConfig:
    return SynthConfig(class_count=8, dim=4, clusters_per_class=1, examples_per_class=20,
                       intra_cluster_stddev=0.5, inter_class_separation=10.0)


@pytest.fixture(scope='session')
def small_dataset(small_synth_config: SynthConfig) -> FeatureDataset:
    return gen_synthetic(small_synth_config, seed=3)


@pytest.fixture(scope='session')
def small_world_config() -> WorldConfig:
    return WorldConfig(width=30, height=30, containers_per_building=4, d_far=8.0,
                       steps_per_interval=60, num_intervals=3)


@pytest.fixture(scope='session')
def separable_batch() -> LabeledBatch:
    """Two classes of 20 points around (0, 0) and (10, 10)."""
    rng = np.random.default_rng(0)
    features = np.concatenate([rng.normal(0.0, 0.1, size=(20, 2)),
                               rng.normal(10.0, 0.1, size=(20, 2))])
    labels = np.repeat([0, 1], 20)
    return LabeledBatch(features, labels)


@pytest.fixture(scope='function')
def worked_example_space() -> ClusterSpace:
    """
    Class 0 (A): one cluster of weight 4 and variance 0.5.
    Class 1 (B): clusters of weight 3 and 4, both with variance 1.3.
    """
    space = ClusterSpace(distance_threshold=2.0, dim=1)
    space.classes[0] = ClassMemory(0, [
        Cluster(np.array([0.0]), weight=4, per_dim_m2=np.array([1.5]),
                covariance=np.array([[1.5]])),
    ])
    space.classes[1] = ClassMemory(1, [
        Cluster(np.array([5.0]), weight=3, per_dim_m2=np.array([2.6]),
                covariance=np.array([[2.6]])),
        Cluster(np.array([9.0]), weight=4, per_dim_m2=np.array([3.9]),
                covariance=np.array([[3.9]])),
    ])
    return space
