"""Synthetic feature generation and stratified splitting."""

import logging
import math
from typing import List, Tuple

import numpy as np

from .dataset import FeatureDataset, LabeledBatch
from ...config.models import SynthConfig

logger = logging.getLogger(__name__)

_MAX_PLACEMENT_ATTEMPTS = 10_000


def split_stratified(examples: LabeledBatch,
                     test_fraction: float,
                     seed: int,
                     ) -> Tuple[LabeledBatch, LabeledBatch]:
    """
    Split examples per class into train and test.

    Per class, ``max(1, round(test_fraction * n))`` examples (rounded
    half up, and leaving at least one for training) are drawn for test
    by a seeded shuffle. Both outputs keep the input order.

    Parameters
    ----------
    examples : LabeledBatch
        Examples to split; every class needs at least 2.
    test_fraction : float
        Fraction in (0, 1).
    seed : int
        Shuffle seed.

    Returns
    -------
    (LabeledBatch, LabeledBatch)
        Train and test batches.
    """
    if not 0 < test_fraction < 1:
        raise ValueError(f'test_fraction must be in (0, 1), got {test_fraction}')
    rng = np.random.default_rng(seed)
    test_mask = np.zeros(len(examples), dtype=bool)
    for class_id in examples.class_ids:
        positions = np.flatnonzero(examples.labels == class_id)
        n = positions.size
        if n < 2:
            raise ValueError(f'class {class_id} has {n} example(s), at least 2 are needed '
                             f'for a stratified split')
        n_test = min(max(1, math.floor(test_fraction * n + 0.5)), n - 1)
        test_mask[rng.permutation(positions)[:n_test]] = True
    return (examples.subset(np.flatnonzero(~test_mask)),
            examples.subset(np.flatnonzero(test_mask)))


def _place_class_anchors(rng: np.random.Generator, cfg: SynthConfig, min_gap: float) -> np.ndarray:
    side = 3.0 * cfg.inter_class_separation * math.ceil(cfg.class_count ** (1.0 / cfg.dim))
    anchors: List[np.ndarray] = []
    for class_id in range(cfg.class_count):
        for _ in range(_MAX_PLACEMENT_ATTEMPTS):
            candidate = rng.uniform(0.0, side, size=cfg.dim)
            if not anchors or np.linalg.norm(np.stack(anchors) - candidate, axis=1).min() >= min_gap:
                anchors.append(candidate)
                break
        else:
            raise ValueError(f'Could not place class {class_id} at separation '
                             f'{cfg.inter_class_separation} in {cfg.dim} dimensions')
    return np.stack(anchors)


def gen_synthetic(cfg: SynthConfig, seed: int) -> FeatureDataset:
    """
    Generate a clustered synthetic feature dataset.

    Each class gets an anchor point; its ``clusters_per_class`` centers
    lie within a quarter of ``inter_class_separation`` of the anchor, and
    anchors are placed by rejection sampling so that any two centers of
    different classes are at least ``inter_class_separation`` apart.
    Examples are drawn from isotropic Gaussians around the centers,
    assigned round-robin, then split with ``split_stratified``.

    Parameters
    ----------
    cfg : SynthConfig
        Generator settings.
    seed : int
        Seed; identical (cfg, seed) give identical datasets.

    Returns
    -------
    FeatureDataset
    """
    rng = np.random.default_rng(seed)
    spread = cfg.inter_class_separation / 4.0
    anchors = _place_class_anchors(rng, cfg, min_gap=cfg.inter_class_separation + 2 * spread)

    features, labels = [], []
    for class_id, anchor in enumerate(anchors):
        directions = rng.normal(size=(cfg.clusters_per_class, cfg.dim))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        radii = rng.uniform(0.0, spread, size=(cfg.clusters_per_class, 1))
        centers = anchor + directions * radii
        assignment = np.arange(cfg.examples_per_class) % cfg.clusters_per_class
        noise = rng.normal(0.0, cfg.intra_cluster_stddev,
                           size=(cfg.examples_per_class, cfg.dim))
        features.append(centers[assignment] + noise)
        labels.append(np.full(cfg.examples_per_class, class_id, dtype=np.int64))

    examples = LabeledBatch(np.concatenate(features), np.concatenate(labels))
    train, test = split_stratified(examples, cfg.test_fraction, seed)
    logger.info(f'Generated synthetic dataset: {cfg.class_count} classes, dim={cfg.dim}, '
                f'{len(train)} train / {len(test)} test examples')
    return FeatureDataset(dim=cfg.dim, class_count=cfg.class_count, train=train, test=test)
