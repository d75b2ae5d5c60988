"""Agglomerative clustering under single, complete and Hausdorff linkage.

Cluster ids follow the usual linkage-matrix convention: leaves are
``0..n-1`` and the cluster formed at (1-based) step ``s`` gets id
``n + s - 1``.

Hausdorff linkage has no Lance-Williams style update, because the distance
from a merged cluster depends on more than the two parent distances. The
engine therefore keeps, for every point ``p`` and active cluster ``C``, the
nearest-member distance ``min_{c in C} d[p, c]``. Merging takes the
elementwise minimum of two columns, and the directed distances follow as
grouped maxima of those columns. Every quantity is a min or max of matrix
entries, so incremental values equal brute-force recomputation bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .metric_core import DistanceMatrix

LINKAGES = ("single", "complete", "hausdorff")
TIE_POLICIES = ("lexicographic", "random")


@dataclass(frozen=True)
class Merge:
    left: int
    right: int
    height: float
    new_id: int
    step: int


@dataclass(frozen=True)
class Dendrogram:
    """Ordered merge history over ``n_leaves`` leaves.

    Heights are recorded as found. Under Hausdorff linkage they need not be
    monotone.
    """

    n_leaves: int
    leaf_labels: tuple
    linkage: str
    merges: tuple

    def __post_init__(self):
        n = self.n_leaves
        if n < 1:
            raise ValueError("dendrogram needs at least one leaf")
        if len(self.leaf_labels) != n:
            raise ValueError(f"{len(self.leaf_labels)} labels for {n} leaves")
        if self.linkage not in LINKAGES:
            raise ValueError(f"unknown linkage {self.linkage!r}")
        if len(self.merges) != n - 1:
            raise ValueError(f"expected {n - 1} merges, got {len(self.merges)}")
        available = set(range(n))
        for s, m in enumerate(self.merges, start=1):
            if m.step != s or m.new_id != n + s - 1:
                raise ValueError(f"merge {s} has step {m.step} and id {m.new_id}")
            if m.left == m.right or m.left not in available or m.right not in available:
                raise ValueError(f"merge {s} joins unavailable clusters {m.left}, {m.right}")
            if not (m.height >= 0 and np.isfinite(m.height)):
                raise ValueError(f"merge {s} has invalid height {m.height!r}")
            available -= {m.left, m.right}
            available.add(m.new_id)
        object.__setattr__(self, "leaf_labels", tuple(self.leaf_labels))
        object.__setattr__(self, "merges", tuple(self.merges))

    @property
    def heights(self) -> np.ndarray:
        return np.array([m.height for m in self.merges], dtype=float)

    def to_linkage_matrix(self) -> np.ndarray:
        """``(n-1, 4)`` array of ``[left, right, height, size]`` rows."""
        size = [1] * self.n_leaves
        rows = []
        for m in self.merges:
            size.append(size[m.left] + size[m.right])
            rows.append([m.left, m.right, m.height, size[-1]])
        return np.array(rows, dtype=float).reshape(-1, 4)

    def members(self) -> list[list[int]]:
        """Leaf indices of every cluster id, leaves first."""
        out = [[i] for i in range(self.n_leaves)]
        for m in self.merges:
            out.append(sorted(out[m.left] + out[m.right]))
        return out


def _as_matrix(D) -> DistanceMatrix:
    return D if isinstance(D, DistanceMatrix) else DistanceMatrix(D)


class ClusterState:
    """Active clusters plus the point-to-cluster minimum-distance table.

    Internally each active cluster occupies a slot (the smallest leaf slot of
    its parents), so every table stays ``n x n``. ``linkage`` selects which
    cluster-to-cluster matrix is maintained for fast pair lookup.
    """

    def __init__(self, D, linkage: str = "hausdorff"):
        if linkage not in LINKAGES:
            raise ValueError(f"unknown linkage {linkage!r}")
        self.matrix = _as_matrix(D)
        self.linkage = linkage
        d = self.matrix.d
        n = self.n = d.shape[0]
        self.members = {i: np.array([i]) for i in range(n)}
        self.next_id = n
        self._slot = {i: i for i in range(n)}
        self._id_at = np.arange(n)
        self._owner = np.arange(n)
        self._active = np.ones(n, dtype=bool)
        self._point_min = d.copy()
        # directed[s, t] = max over p in s of point_min[p, t]
        self._directed = d.copy() if linkage == "hausdorff" else None
        self._pair = d.copy()
        np.fill_diagonal(self._pair, np.inf)

    def __len__(self):
        return len(self.members)

    def _check_pair(self, a, b):
        for c in (a, b):
            if c not in self.members:
                raise ValueError(f"cluster {c} is not active")
        if a == b:
            raise ValueError(f"cannot pair cluster {a} with itself")

    def point_min(self, p: int, cluster: int) -> float:
        return float(self._point_min[p, self._slot[cluster]])

    def point_min_column(self, cluster: int) -> np.ndarray:
        return self._point_min[:, self._slot[cluster]].copy()

    def pair_distance(self, a: int, b: int) -> float:
        """Maintained linkage distance between two active clusters, O(1)."""
        self._check_pair(a, b)
        return float(self._pair[self._slot[a], self._slot[b]])

    def active_pairs(self):
        ids = sorted(self.members)
        return [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]]

    def closest_pairs(self):
        """Smallest maintained distance and all id pairs attaining it exactly."""
        best = self._pair.min()
        si, sj = np.nonzero(self._pair == best)
        keep = si < sj
        ids = self._id_at
        pairs = sorted(
            (min(a, b), max(a, b)) for a, b in zip(ids[si[keep]].tolist(), ids[sj[keep]].tolist())
        )
        return float(best), pairs

    def merge(self, a: int, b: int) -> int:
        """Replace clusters ``a`` and ``b`` by their union; return the new id."""
        self._check_pair(a, b)
        sa, sb = self._slot.pop(a), self._slot.pop(b)
        s, o = min(sa, sb), max(sa, sb)
        new = self.next_id
        self.next_id += 1
        members = np.sort(np.concatenate([self.members.pop(a), self.members.pop(b)]))
        self.members[new] = members
        self._slot[new] = s
        self._id_at[s] = new
        self._id_at[o] = -1
        self._active[o] = False
        self._owner[members] = s

        pm = self._point_min
        pm[:, s] = np.minimum(pm[:, sa], pm[:, sb])
        pm[:, o] = np.inf

        P = self._pair
        if self.linkage == "single":
            row = np.minimum(P[sa], P[sb])
        elif self.linkage == "complete":
            row = np.maximum(P[sa], P[sb])
        else:
            H = self._directed
            out = np.maximum(H[sa], H[sb])
            into = np.full(self.n, -np.inf)
            np.maximum.at(into, self._owner, pm[:, s])
            H[s, :] = out
            H[:, s] = into
            row = np.maximum(out, into)
        row[~self._active] = np.inf
        row[s] = np.inf
        P[s, :] = row
        P[:, s] = row
        P[o, :] = np.inf
        P[:, o] = np.inf
        return new


def merge_clusters(state: ClusterState, a: int, b: int) -> ClusterState:
    """Merge ``a`` and ``b`` in place and return the state for chaining."""
    state.merge(a, b)
    return state


def cluster_pair_distance(state: ClusterState, a: int, b: int, linkage: str) -> float:
    """Linkage distance recomputed by scanning the point-minimum table.

    Independent of the maintained pair matrix; used to cross-check it.
    """
    state._check_pair(a, b)
    ma, mb = state.members[a], state.members[b]
    if linkage == "hausdorff":
        return float(max(state._point_min[ma, state._slot[b]].max(),
                         state._point_min[mb, state._slot[a]].max()))
    if linkage == "single":
        return float(state._point_min[ma, state._slot[b]].min())
    if linkage == "complete":
        return float(state.matrix.d[np.ix_(ma, mb)].max())
    raise ValueError(f"unknown linkage {linkage!r}")


def agglomerate(
    D,
    linkage: str = "hausdorff",
    ties: str = "lexicographic",
    seed: Optional[int] = None,
    on_step: Optional[Callable[[ClusterState], None]] = None,
) -> Dendrogram:
    """Cluster bottom-up, always merging the closest pair of active clusters.

    Ties are exact equalities of the linkage distance. ``"lexicographic"``
    picks the smallest ``(id, id)`` pair; ``"random"`` draws uniformly among
    the tied pairs with a generator seeded by ``seed``. ``on_step`` is called
    with the state before each merge.
    """
    if ties not in TIE_POLICIES:
        raise ValueError(f"unknown tie policy {ties!r}")
    D = _as_matrix(D)
    state = ClusterState(D, linkage)
    rng = np.random.default_rng(seed) if ties == "random" else None
    merges = []
    for step in range(1, D.n):
        if on_step is not None:
            on_step(state)
        height, pairs = state.closest_pairs()
        a, b = pairs[0] if rng is None or len(pairs) == 1 else pairs[rng.integers(len(pairs))]
        new = state.merge(a, b)
        merges.append(Merge(a, b, height, new, step))
    return Dendrogram(D.n, tuple(D.labels), linkage, tuple(merges))
