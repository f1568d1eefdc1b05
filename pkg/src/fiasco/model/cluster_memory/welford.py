"""Streaming mean and variance updates that need no stored history."""

from typing import Union

import numpy as np

ArrayOrFloat = Union[float, np.ndarray]


def update_centroid(centroid: np.ndarray, n: int, x: np.ndarray) -> np.ndarray:
    """
    Weighted-mean update of a centroid with its n-th vector.

    ``n * mean_n = x + (n - 1) * mean_{n-1}``

    Parameters
    ----------
    centroid : numpy.ndarray
        Mean of the previous n - 1 vectors.
    n : int
        Count including ``x``; at least 2.
    x : numpy.ndarray
        New vector.

    Returns
    -------
    numpy.ndarray
        Mean of all n vectors.
    """
    centroid = np.asarray(centroid, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if centroid.shape != x.shape:
        raise ValueError(f'Dimension mismatch: centroid {centroid.shape}, vector {x.shape}')
    if n < 2:
        raise ValueError(f'Centroid update needs n >= 2, got {n}')
    return (x + (n - 1) * centroid) / n


def update_variance(s_prev: ArrayOrFloat,
                    n: int,
                    x: ArrayOrFloat,
                    mean_n: ArrayOrFloat,
                    mean_prev: ArrayOrFloat,
                    ) -> ArrayOrFloat:
    """
    Welford update of the sample variance with the n-th value.

    Solves ``(n-1) s_n^2 - (n-2) s_{n-1}^2 = (x - mean_n)(x - mean_{n-1})``
    for ``s_n^2``. Works elementwise on arrays, i.e. per dimension.

    Parameters
    ----------
    s_prev : float or numpy.ndarray
        Sample variance of the first n - 1 values (0 when n == 2).
    n : int
        Count including ``x``; at least 2.
    x : float or numpy.ndarray
        New value.
    mean_n : float or numpy.ndarray
        Mean including ``x``.
    mean_prev : float or numpy.ndarray
        Mean of the first n - 1 values.

    Returns
    -------
    float or numpy.ndarray
        Sample variance of all n values.
    """
    if n < 2:
        raise ValueError(f'Variance update needs n >= 2, got {n}')
    return ((n - 2) * s_prev + (x - mean_n) * (x - mean_prev)) / (n - 1)
