"""Labeled feature-vector containers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

import numpy as np


@dataclass(frozen=True)
class LabeledBatch:
    """
    A batch of labeled feature vectors.

    Attributes
    ----------
    features : numpy.ndarray
        Array of shape (n, dim), float64, all entries finite.
    labels : numpy.ndarray
        Array of shape (n,), int64 class ids.
    """

    features: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        features = np.array(self.features, dtype=np.float64)
        labels = np.array(self.labels, dtype=np.int64)
        if features.ndim != 2:
            raise ValueError(f'features must be 2-dimensional, got shape {features.shape}')
        if labels.shape != (features.shape[0],):
            raise ValueError(f'{labels.shape[0] if labels.ndim else 0} labels for '
                             f'{features.shape[0]} feature vectors')
        if not np.all(np.isfinite(features)):
            raise ValueError('Feature vectors must be finite')
        if labels.size and labels.min() < 0:
            raise ValueError('Class ids must be non-negative')
        features.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, 'features', features)
        object.__setattr__(self, 'labels', labels)

    def __len__(self) -> int:
        return int(self.labels.shape[0])

    @property
    def dim(self) -> int:
        """Feature dimension."""
        return int(self.features.shape[1])

    @property
    def class_ids(self) -> List[int]:
        """Sorted distinct class ids present in the batch."""
        return [int(c) for c in np.unique(self.labels)]

    @classmethod
    def empty(cls, dim: int) -> LabeledBatch:
        """Batch without examples."""
        return cls(np.zeros((0, dim)), np.zeros(0, dtype=np.int64))

    @classmethod
    def concat(cls, batches: Sequence[LabeledBatch], dim: Optional[int] = None) -> LabeledBatch:
        """
        Concatenate batches in order.

        Parameters
        ----------
        batches : sequence of LabeledBatch
            Batches to join; all must share the feature dimension.
        dim : int, optional
            Dimension of the result if ``batches`` is empty.

        Returns
        -------
        LabeledBatch
        """
        if not batches:
            if dim is None:
                raise ValueError('Cannot infer the dimension of an empty concatenation')
            return cls.empty(dim)
        dims = {b.dim for b in batches}
        if len(dims) > 1:
            raise ValueError(f'Cannot concatenate batches of dimensions {sorted(dims)}')
        return cls(np.concatenate([b.features for b in batches]),
                   np.concatenate([b.labels for b in batches]))

    def subset(self, indices: Iterable[int]) -> LabeledBatch:
        """Batch of the examples at the given positions, in that order."""
        idx = np.asarray(list(indices), dtype=np.int64)
        return LabeledBatch(self.features[idx], self.labels[idx])

    def of_class(self, class_id: int) -> np.ndarray:
        """Feature vectors of one class."""
        return self.features[self.labels == class_id]


@dataclass(frozen=True)
class FeatureDataset:
    """
    Labeled feature vectors with a stratified train/test split.

    Attributes
    ----------
    dim : int
        Feature dimension shared by all examples.
    class_count : int
        Number of classes; class ids are 0..class_count-1.
    train : LabeledBatch
        Training examples; every class occurs at least once.
    test : LabeledBatch
        Test examples.
    class_names : list of str, optional
        Human-readable names indexed by class id.
    """

    dim: int
    class_count: int
    train: LabeledBatch
    test: LabeledBatch
    class_names: Optional[List[str]] = field(default=None)

    def __post_init__(self):
        if self.dim <= 0 or self.class_count <= 0:
            raise ValueError('dim and class_count must be positive')
        for name, batch in (('train', self.train), ('test', self.test)):
            if len(batch) and batch.dim != self.dim:
                raise ValueError(f'{name} examples have dimension {batch.dim}, '
                                 f'expected {self.dim}')
            if len(batch) and batch.labels.max() >= self.class_count:
                raise ValueError(f'{name} holds class id {int(batch.labels.max())}, '
                                 f'declared classes={self.class_count}')
        present = set(self.train.class_ids)
        for class_id in range(self.class_count):
            if class_id not in present:
                raise ValueError(f'class {class_id} has no training examples')
        if self.class_names is not None and len(self.class_names) != self.class_count:
            raise ValueError(f'{len(self.class_names)} class names for '
                             f'{self.class_count} classes')

    @property
    def classes(self) -> List[int]:
        """All class ids."""
        return list(range(self.class_count))

    def class_means(self) -> np.ndarray:
        """Mean training feature vector per class, shape (class_count, dim)."""
        return np.stack([self.train.of_class(c).mean(axis=0) for c in self.classes])

    def train_indices_of(self, class_id: int) -> np.ndarray:
        """Positions in ``train`` holding examples of the class."""
        return np.flatnonzero(self.train.labels == class_id)

    def restrict_classes(self, max_classes: int) -> FeatureDataset:
        """
        Keep only the first ``max_classes`` classes.

        Parameters
        ----------
        max_classes : int
            Number of classes to keep (ids 0..max_classes-1).

        Returns
        -------
        FeatureDataset
        """
        if max_classes >= self.class_count:
            return self

        def keep(batch: LabeledBatch) -> LabeledBatch:
            return batch.subset(np.flatnonzero(batch.labels < max_classes))

        names = None if self.class_names is None else self.class_names[:max_classes]
        return FeatureDataset(dim=self.dim, class_count=max_classes,
                              train=keep(self.train), test=keep(self.test), class_names=names)
