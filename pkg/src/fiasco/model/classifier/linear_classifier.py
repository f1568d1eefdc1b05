"""Linear classifier model, prediction and evaluation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

import numpy as np

from ..feature_store import LabeledBatch

FORMAT_VERSION = 1


@dataclass(frozen=True)
class LinearClassifier:
    """
    Multiclass linear model with one weight row per class.

    Attributes
    ----------
    weights : numpy.ndarray
        Shape (class_count, dim + 1); the last column is the bias.
    class_ids : tuple of int
        Class id of each row, in ascending order so that argmax ties
        resolve to the lowest class id.
    """

    weights: np.ndarray
    class_ids: Tuple[int, ...]

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.float64)
        class_ids = tuple(int(c) for c in self.class_ids)
        if weights.ndim != 2 or weights.shape[1] < 2:
            raise ValueError(f'weights must have shape (classes, dim + 1), got {weights.shape}')
        if len(class_ids) != weights.shape[0]:
            raise ValueError(f'{len(class_ids)} class ids for {weights.shape[0]} weight rows')
        if list(class_ids) != sorted(set(class_ids)):
            raise ValueError(f'class_ids must be unique and ascending, got {class_ids}')
        if not np.all(np.isfinite(weights)):
            raise ValueError('Classifier weights must be finite')
        weights.setflags(write=False)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'class_ids', class_ids)

    @property
    def dim(self) -> int:
        """Feature dimension."""
        return int(self.weights.shape[1] - 1)

    @classmethod
    def constant(cls, class_id: int, dim: int) -> LinearClassifier:
        """An untrained model that predicts ``class_id`` for every input."""
        return cls(np.zeros((1, dim + 1)), (class_id,))

    def scores(self, features: np.ndarray) -> np.ndarray:
        """
        Class scores w·x + b.

        Parameters
        ----------
        features : numpy.ndarray
            Shape (n, dim).

        Returns
        -------
        numpy.ndarray
            Shape (n, class_count), columns in ``class_ids`` order.
        """
        features = np.atleast_2d(np.asarray(features, dtype=np.float64))
        if features.shape[1] != self.dim:
            raise ValueError(f'Dimension mismatch: classifier expects {self.dim}, '
                             f'got {features.shape[1]}')
        return features @ self.weights[:, :-1].T + self.weights[:, -1]

    def predict_batch(self, features: np.ndarray) -> np.ndarray:
        """Predicted class id per row of ``features``."""
        return np.asarray(self.class_ids, dtype=np.int64)[np.argmax(self.scores(features), axis=1)]

    def to_dict(self) -> Dict:
        return {
            'format_version': FORMAT_VERSION,
            'class_ids': list(self.class_ids),
            'weights': self.weights.tolist(),
        }

    @classmethod
    def from_dict(cls, document: Dict) -> LinearClassifier:
        version = document.get('format_version')
        if version != FORMAT_VERSION:
            raise ValueError(f'Unsupported classifier format_version: {version}')
        return cls(np.asarray(document['weights'], dtype=np.float64),
                   tuple(document['class_ids']))

    def to_json(self) -> str:
        """Versioned JSON checkpoint."""
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> LinearClassifier:
        return cls.from_dict(json.loads(text))


def predict(clf: LinearClassifier, feature: np.ndarray) -> int:
    """
    Predict the class of one feature vector.

    Parameters
    ----------
    clf : LinearClassifier
        Trained model.
    feature : numpy.ndarray
        Vector of dimension ``clf.dim``.

    Returns
    -------
    int
        Class id with the highest score; lowest id on ties.
    """
    feature = np.asarray(feature, dtype=np.float64)
    if feature.shape != (clf.dim,):
        raise ValueError(f'Dimension mismatch: classifier expects ({clf.dim},), '
                         f'got {feature.shape}')
    return int(clf.predict_batch(feature[np.newaxis, :])[0])


def evaluate(clf: LinearClassifier, test: LabeledBatch, env_classes: Iterable[int]) -> float:
    """
    Accuracy over the test examples of all environment classes.

    Classes the model was never trained on still count; their examples
    are errors unless predicted correctly by chance.

    Parameters
    ----------
    clf : LinearClassifier
        Model to evaluate.
    test : LabeledBatch
        Test examples.
    env_classes : iterable of int
        Classes present in the environment.

    Returns
    -------
    float
        Fraction of correctly classified examples.
    """
    mask = np.isin(test.labels, np.fromiter(env_classes, dtype=np.int64))
    if not mask.any():
        raise ValueError('No test examples for the environment classes')
    predicted = clf.predict_batch(test.features[mask])
    return float(np.mean(predicted == test.labels[mask]))
