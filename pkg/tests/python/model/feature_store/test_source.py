import logging
from pathlib import Path

from src.fiasco.config.models import DatasetSource, SynthConfig
from src.fiasco.model.feature_store import load_source


def test_synthetic_source(small_synth_config: SynthConfig):
    dataset = load_source(DatasetSource(synth=small_synth_config, synth_seed=3, max_classes=5))
    assert dataset.class_count == 5
    assert set(dataset.test.class_ids) == set(range(5))


def test_file_source(test_data_dir: Path, caplog):
    caplog.set_level(logging.INFO)
    features = test_data_dir / 'features'
    source = DatasetSource(path=features / 'tiny_train.csv', test_path=features / 'tiny_test.csv',
                           class_names_path=features / 'tiny_names.csv')
    dataset = load_source(source)
    assert dataset.class_names == ['apple', 'banana']
    assert len(dataset.train) == 4
    assert any('sha256' in m for m in caplog.messages)
