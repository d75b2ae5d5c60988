"""Distances between finite index sets over a distance matrix.

All four functions take index sets ``A`` and ``B`` (any iterable of ints) and
a :class:`~hausclust.metric_core.DistanceMatrix` or square array, and cost
O(|A| |B|) per call.
"""

from __future__ import annotations

import numpy as np

from .metric_core import DistanceMatrix


def index_set(members, n: int) -> np.ndarray:
    """Validate ``members`` as a nonempty duplicate-free set of indices < n."""
    if isinstance(members, (set, frozenset)):
        members = sorted(members)
    idx = np.sort(np.asarray(members))
    if idx.ndim != 1 or idx.size == 0:
        raise ValueError("index set must be a nonempty flat collection")
    if idx.dtype.kind not in "iu":
        raise ValueError("index set must contain integers")
    if idx[0] < 0 or idx[-1] >= n:
        raise ValueError(f"index out of range for {n} elements")
    if idx.size > 1 and not (idx[1:] > idx[:-1]).all():
        raise ValueError("index set has duplicates")
    return idx


def _block(A, B, D) -> np.ndarray:
    d = D.d if isinstance(D, DistanceMatrix) else np.asarray(D, dtype=float)
    n = d.shape[0]
    return d[index_set(A, n)[:, None], index_set(B, n)]


def single_distance(A, B, D) -> float:
    """Smallest pairwise distance between A and B."""
    return float(_block(A, B, D).min())


def complete_distance(A, B, D) -> float:
    """Largest pairwise distance between A and B."""
    return float(_block(A, B, D).max())


def directed_hausdorff(A, B, D) -> float:
    """Largest distance from a point of A to its nearest point of B."""
    return float(_block(A, B, D).min(axis=1).max())


def hausdorff_distance(A, B, D) -> float:
    block = _block(A, B, D)
    return float(max(block.min(axis=1).max(), block.min(axis=0).max()))
