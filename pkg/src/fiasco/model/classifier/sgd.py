"""
One-vs-rest L2-regularized hinge loss trained by stochastic subgradient descent.

Each class row k scores an example as w_k·x + b_k and is trained against
targets y = +1 for class k and -1 otherwise. The bias is not regularized.
"""

import logging

import numpy as np

from .linear_classifier import LinearClassifier
from ..feature_store import LabeledBatch
from ...config.models import TrainConfig

logger = logging.getLogger(__name__)


def _augment(features: np.ndarray) -> np.ndarray:
    return np.hstack([features, np.ones((features.shape[0], 1))])


def _targets(labels: np.ndarray, class_ids: np.ndarray) -> np.ndarray:
    return np.where(labels[:, np.newaxis] == class_ids[np.newaxis, :], 1.0, -1.0)


def stability_bound(batch: LabeledBatch) -> float:
    """
    Learning rate below which epoch-wise hinge objective stays non-increasing
    on small, separable toy sets: 1 / max ||(x, 1)||².
    """
    return float(1.0 / np.max(np.sum(_augment(batch.features) ** 2, axis=1)))


def train(batch: LabeledBatch, cfg: TrainConfig) -> LinearClassifier:
    """
    Train a one-vs-rest linear classifier.

    Examples are visited in a fresh seeded permutation every epoch. The
    step size at update t (counted over all epochs) is
    ``learning_rate / (1 + l2 * learning_rate * t)``.

    Parameters
    ----------
    batch : LabeledBatch
        Training examples of at least two classes.
    cfg : TrainConfig
        Epochs, learning rate, L2 strength and seed.

    Returns
    -------
    LinearClassifier
        Deterministic for a given example order and config.
    """
    if len(batch) == 0:
        raise ValueError('Cannot train a classifier without examples')
    class_ids = np.asarray(batch.class_ids, dtype=np.int64)
    if class_ids.size < 2:
        raise ValueError(f'Training needs at least two classes, got {class_ids.tolist()}')

    x = _augment(batch.features)
    y = _targets(batch.labels, class_ids)
    weights = np.zeros((class_ids.size, x.shape[1]))
    rng = np.random.default_rng(cfg.seed)
    t = 0
    for _ in range(cfg.epochs):
        for i in rng.permutation(len(batch)):
            t += 1
            eta = cfg.learning_rate / (1.0 + cfg.l2 * cfg.learning_rate * t)
            violated = y[i] * (weights @ x[i]) < 1.0
            if cfg.l2:
                weights[:, :-1] *= 1.0 - eta * cfg.l2
            weights[violated] += eta * np.outer(y[i, violated], x[i])

    logger.debug(f'Trained {class_ids.size}-class model on {len(batch)} examples, '
                 f'{t} updates')
    return LinearClassifier(weights, tuple(class_ids.tolist()))


def hinge_objective(clf: LinearClassifier, batch: LabeledBatch, l2: float) -> float:
    """
    Regularized one-vs-rest hinge objective of a model on a batch.

    Parameters
    ----------
    clf : LinearClassifier
        Model to score.
    batch : LabeledBatch
        Examples; labels unknown to the model are negatives for every row.
    l2 : float
        Regularization strength.

    Returns
    -------
    float
        ``l2 / 2 * ||W||² + mean_i sum_k max(0, 1 - y_ik * s_ik)``.
    """
    y = _targets(batch.labels, np.asarray(clf.class_ids, dtype=np.int64))
    losses = np.maximum(0.0, 1.0 - y * clf.scores(batch.features))
    penalty = 0.5 * l2 * float(np.sum(clf.weights[:, :-1] ** 2))
    return penalty + float(np.mean(np.sum(losses, axis=1)))


def fit(batch: LabeledBatch, cfg: TrainConfig) -> LinearClassifier:
    """Train on ``batch``; a single-class batch yields a constant model of that class."""
    class_ids = batch.class_ids
    if len(class_ids) == 1:
        return LinearClassifier.constant(class_ids[0], batch.dim)
    return train(batch, cfg)
