"""Cluster memory: distance-threshold clustering with streaming statistics."""

from .welford import update_centroid, update_variance
from .cluster_space import AbsorbReport, ClassMemory, ClassStats, Cluster, ClusterSpace
