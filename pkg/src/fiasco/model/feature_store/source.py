"""Resolve a configured dataset source into a FeatureDataset."""

import logging

from .dataset import FeatureDataset
from .feature_file import load_dataset
from .synthetic import gen_synthetic
from ...config.models import DatasetSource
from ...util.io import get_file_checksum

logger = logging.getLogger(__name__)


def load_source(source: DatasetSource) -> FeatureDataset:
    """
    Read or generate the dataset described by ``source``.

    Parameters
    ----------
    source : DatasetSource
        Feature file(s) or synthetic settings.

    Returns
    -------
    FeatureDataset
        Restricted to ``max_classes`` classes when set.
    """
    if source.is_synthetic:
        dataset = gen_synthetic(source.synth, source.synth_seed)
    else:
        dataset = load_dataset(source.path, source.test_path, source.class_names_path)
        logger.info(f'Feature file {source.path} (sha256 {get_file_checksum(source.path)})')
    if source.max_classes is not None:
        dataset = dataset.restrict_classes(source.max_classes)
        logger.info(f'Restricted dataset to the first {dataset.class_count} classes')
    return dataset
