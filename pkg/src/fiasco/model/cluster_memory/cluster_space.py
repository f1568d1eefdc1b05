"""Cluster space: the incremental learner's long-term memory."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional

import numpy as np

from .welford import update_centroid, update_variance
from ..feature_store import LabeledBatch

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


@dataclass
class Cluster:
    """
    A cluster of absorbed feature vectors, summarized by streaming statistics.

    Attributes
    ----------
    centroid : numpy.ndarray
        Running mean of the absorbed vectors.
    weight : int
        Number of absorbed vectors.
    per_dim_m2 : numpy.ndarray
        Per-dimension sum of squared deviations from the mean.
    covariance : numpy.ndarray
        Co-moment accumulator; (dim, dim), or (dim,) when only the
        diagonal is tracked.
    diagonal : bool
        Track only the covariance diagonal.
    """

    centroid: np.ndarray
    weight: int = 1
    per_dim_m2: Optional[np.ndarray] = None
    covariance: Optional[np.ndarray] = None
    diagonal: bool = False

    def __post_init__(self):
        self.centroid = np.array(self.centroid, dtype=np.float64)
        dim = self.centroid.shape[0]
        if self.per_dim_m2 is None:
            self.per_dim_m2 = np.zeros(dim)
        if self.covariance is None:
            self.covariance = np.zeros(dim) if self.diagonal else np.zeros((dim, dim))
        self.per_dim_m2 = np.array(self.per_dim_m2, dtype=np.float64)
        self.covariance = np.array(self.covariance, dtype=np.float64)

    @property
    def dim(self) -> int:
        """Feature dimension."""
        return int(self.centroid.shape[0])

    @property
    def scalar_variance(self) -> float:
        """Dimension-averaged sample variance (0 below two vectors)."""
        if self.weight < 2:
            return 0.0
        return float(np.mean(self.per_dim_m2 / (self.weight - 1)))

    def sample_covariance(self) -> np.ndarray:
        """Sample covariance matrix (zeros below two vectors)."""
        if self.weight < 2:
            return np.zeros((self.dim, self.dim))
        if self.diagonal:
            return np.diag(self.covariance / (self.weight - 1))
        return self.covariance / (self.weight - 1)

    def absorb(self, x: np.ndarray) -> None:
        """Fold one vector into the centroid, weight and accumulators."""
        n = self.weight + 1
        mean_prev = self.centroid
        mean_n = update_centroid(mean_prev, n, x)
        s_prev = self.per_dim_m2 / (n - 2) if n > 2 else np.zeros(self.dim)
        self.per_dim_m2 = update_variance(s_prev, n, x, mean_n, mean_prev) * (n - 1)

        delta_prev = x - mean_prev
        delta_n = x - mean_n
        if self.diagonal:
            self.covariance = self.covariance + delta_prev * delta_n
        else:
            co_moment = np.outer(delta_prev, delta_n)
            self.covariance = self.covariance + 0.5 * (co_moment + co_moment.T)
        self.centroid = mean_n
        self.weight = n

    def to_dict(self) -> Dict:
        """JSON-serializable record."""
        return {
            'centroid': self.centroid.tolist(),
            'weight': self.weight,
            'per_dim_m2': self.per_dim_m2.tolist(),
            'covariance': self.covariance.tolist(),
        }


@dataclass
class ClassMemory:
    """All clusters of one class."""

    class_id: int
    clusters: List[Cluster] = field(default_factory=list)

    @property
    def class_weight(self) -> int:
        """Total number of vectors absorbed for this class."""
        return sum(c.weight for c in self.clusters)

    def centroids(self) -> np.ndarray:
        """Centroids stacked into shape (n_clusters, dim)."""
        return np.stack([c.centroid for c in self.clusters])


@dataclass(frozen=True)
class ClassStats:
    """Cluster-averaged statistics of one class, used for class selection."""

    class_id: int
    class_weight: int
    avg_cluster_weight: float
    avg_cluster_variance: float
    cluster_count: int = 0

    @property
    def is_seen(self) -> bool:
        """True if the class has absorbed at least one vector."""
        return self.class_weight > 0

    @classmethod
    def unseen(cls, class_id: int) -> ClassStats:
        """Statistics of a class that was never absorbed."""
        return cls(class_id=class_id, class_weight=0, avg_cluster_weight=0.0,
                   avg_cluster_variance=0.0, cluster_count=0)


@dataclass
class AbsorbReport:
    """Outcome of absorbing a batch."""

    clusters_created: int = 0
    clusters_updated: int = 0
    max_insertion_distance: float = 0.0

    def __iadd__(self, other: AbsorbReport) -> AbsorbReport:
        self.clusters_created += other.clusters_created
        self.clusters_updated += other.clusters_updated
        self.max_insertion_distance = max(self.max_insertion_distance,
                                          other.max_insertion_distance)
        return self


class ClusterSpace:
    """
    Per-class collections of clusters built by distance-threshold clustering.

    A vector farther than ``distance_threshold`` from every centroid of
    its class starts a new cluster; otherwise it is folded into the
    closest centroid (lowest index on ties). Raw vectors are not kept.

    Parameters
    ----------
    distance_threshold : float
        Euclidean distance threshold D.
    dim : int
        Feature dimension.
    diagonal_covariance : bool, default False
        Track only the diagonal of each cluster's covariance.
    """

    def __init__(self, distance_threshold: float, dim: int, diagonal_covariance: bool = False):
        if distance_threshold <= 0:
            raise ValueError(f'distance_threshold must be positive, got {distance_threshold}')
        if dim <= 0:
            raise ValueError(f'dim must be positive, got {dim}')
        self.distance_threshold = float(distance_threshold)
        self.dim = int(dim)
        self.diagonal_covariance = diagonal_covariance
        self.classes: Dict[int, ClassMemory] = {}

    def __contains__(self, class_id: int) -> bool:
        return class_id in self.classes

    @property
    def class_ids(self) -> List[int]:
        """Known class ids in ascending order."""
        return sorted(self.classes)

    @property
    def total_weight(self) -> int:
        """Number of vectors absorbed over all classes."""
        return sum(m.class_weight for m in self.classes.values())

    @property
    def cluster_count(self) -> int:
        """Number of clusters over all classes."""
        return sum(len(m.clusters) for m in self.classes.values())

    def _memory(self, class_id: int) -> ClassMemory:
        try:
            return self.classes[class_id]
        except KeyError:
            raise KeyError(f'Unknown class {class_id}') from None

    def absorb(self, class_id: int, batch: Iterable[np.ndarray]) -> AbsorbReport:
        """
        Absorb vectors of one class in order.

        Parameters
        ----------
        class_id : int
            Class of every vector in the batch.
        batch : iterable of numpy.ndarray
            Feature vectors of dimension ``dim``.

        Returns
        -------
        AbsorbReport
            Counts of created and updated clusters.
        """
        report = AbsorbReport()
        memory = self.classes.get(class_id)
        for vector in batch:
            x = np.asarray(vector, dtype=np.float64)
            if x.shape != (self.dim,):
                raise ValueError(f'Dimension mismatch: expected ({self.dim},), got {x.shape}')
            if memory is None:
                memory = self.classes[class_id] = ClassMemory(class_id)
            if not memory.clusters:
                memory.clusters.append(Cluster(x, diagonal=self.diagonal_covariance))
                report.clusters_created += 1
                continue
            distances = np.linalg.norm(memory.centroids() - x, axis=1)
            closest = int(np.argmin(distances))
            if distances[closest] > self.distance_threshold:
                memory.clusters.append(Cluster(x, diagonal=self.diagonal_covariance))
                report.clusters_created += 1
            else:
                memory.clusters[closest].absorb(x)
                report.clusters_updated += 1
                report.max_insertion_distance = max(report.max_insertion_distance,
                                                    float(distances[closest]))
        return report

    def absorb_batch(self, batch: LabeledBatch) -> AbsorbReport:
        """Absorb a mixed-class batch example by example, in batch order."""
        report = AbsorbReport()
        for label, vector in zip(batch.labels, batch.features):
            report += self.absorb(int(label), [vector])
        logger.debug(f'Absorbed {len(batch)} vectors: {report.clusters_created} new clusters, '
                     f'{report.clusters_updated} updates')
        return report

    def class_stats(self, class_id: int) -> ClassStats:
        """
        Cluster-averaged statistics of a known class.

        Parameters
        ----------
        class_id : int
            A class that has absorbed at least one vector.

        Returns
        -------
        ClassStats
        """
        memory = self._memory(class_id)
        count = len(memory.clusters)
        weight = memory.class_weight
        return ClassStats(class_id=class_id,
                          class_weight=weight,
                          avg_cluster_weight=weight / count,
                          avg_cluster_variance=float(np.mean([c.scalar_variance
                                                              for c in memory.clusters])),
                          cluster_count=count)

    def stats_for(self, class_ids: Iterable[int]) -> List[ClassStats]:
        """Statistics for the given classes; unknown classes get zero statistics."""
        return [self.class_stats(c) if c in self.classes else ClassStats.unseen(c)
                for c in class_ids]

    def centroids(self, class_id: int) -> np.ndarray:
        """All centroids of a class, shape (n_clusters, dim)."""
        return self._memory(class_id).centroids()

    @staticmethod
    def _allocate(weights: np.ndarray, total: int) -> np.ndarray:
        quotas = total * weights / weights.sum()
        counts = np.floor(quotas).astype(np.int64)
        remainders = quotas - counts
        # largest remainder first, lowest index on ties
        order = sorted(range(len(weights)), key=lambda i: (-remainders[i], i))
        for i in order[:total - int(counts.sum())]:
            counts[i] += 1
        return counts

    def generate_pseudo_exemplars(self, class_id: int, n_p: int, seed: int) -> LabeledBatch:
        """
        Sample pseudo-exemplars of a class from its cluster Gaussians.

        ``n_p`` samples are split over the clusters in proportion to
        cluster weight (largest-remainder rounding). A cluster's samples
        are drawn from a Gaussian at its centroid with its sample
        covariance; clusters holding one vector emit copies of their
        centroid.

        Parameters
        ----------
        class_id : int
            A known class.
        n_p : int
            Number of pseudo-exemplars to return.
        seed : int
            Sampling seed.

        Returns
        -------
        LabeledBatch
            Exactly ``n_p`` vectors labeled ``class_id``.
        """
        if n_p <= 0:
            raise ValueError(f'n_p must be positive, got {n_p}')
        memory = self._memory(class_id)
        rng = np.random.default_rng(seed)
        weights = np.array([c.weight for c in memory.clusters], dtype=np.float64)
        samples = []
        for cluster, count in zip(memory.clusters, self._allocate(weights, n_p)):
            if count == 0:
                continue
            if cluster.weight < 2:
                samples.append(np.tile(cluster.centroid, (count, 1)))
            elif cluster.diagonal:
                stddev = np.sqrt(np.maximum(cluster.covariance / (cluster.weight - 1), 0.0))
                samples.append(rng.normal(cluster.centroid, stddev, size=(count, self.dim)))
            else:
                samples.append(rng.multivariate_normal(cluster.centroid,
                                                       cluster.sample_covariance(),
                                                       size=count,
                                                       check_valid='ignore',
                                                       method='eigh'))
        features = np.concatenate(samples)
        return LabeledBatch(features, np.full(n_p, class_id, dtype=np.int64))

    def to_dict(self) -> Dict:
        """Versioned JSON-serializable document."""
        return {
            'format_version': FORMAT_VERSION,
            'distance_threshold': self.distance_threshold,
            'dim': self.dim,
            'diagonal_covariance': self.diagonal_covariance,
            'classes': [
                {'class_id': class_id,
                 'clusters': [c.to_dict() for c in self.classes[class_id].clusters]}
                for class_id in self.class_ids
            ],
        }

    @classmethod
    def from_dict(cls, document: Dict) -> ClusterSpace:
        """
        Rebuild a cluster space from ``to_dict`` output.

        Parameters
        ----------
        document : dict
            Versioned cluster space document.

        Returns
        -------
        ClusterSpace
        """
        version = document.get('format_version')
        if version != FORMAT_VERSION:
            raise ValueError(f'Unsupported cluster space format_version: {version}')
        space = cls(document['distance_threshold'], document['dim'],
                    document.get('diagonal_covariance', False))
        for record in document['classes']:
            clusters = [Cluster(centroid=c['centroid'], weight=int(c['weight']),
                                per_dim_m2=c['per_dim_m2'], covariance=c['covariance'],
                                diagonal=space.diagonal_covariance)
                        for c in record['clusters']]
            for cluster in clusters:
                if cluster.dim != space.dim:
                    raise ValueError(f"Class {record['class_id']}: centroid of dimension "
                                     f"{cluster.dim}, expected {space.dim}")
            space.classes[int(record['class_id'])] = ClassMemory(int(record['class_id']), clusters)
        return space

    def to_json(self) -> str:
        """Checkpoint document as a JSON string."""
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> ClusterSpace:
        """Rebuild a cluster space from ``to_json`` output."""
        return cls.from_dict(json.loads(text))

    def save(self, path: Path) -> None:
        """Write the cluster space checkpoint to a file."""
        path.write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> ClusterSpace:
        """Read a cluster space checkpoint written by ``save``."""
        return cls.from_json(path.read_text(encoding="utf-8"))
