"""Dendrogram cuts, cluster entropy and backstep detection."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .linkage import Dendrogram


@dataclass(frozen=True)
class Partition:
    """Total allocation of elements to labels ``1..k``.

    Labels are ordered by the smallest member of each cluster, so element 0
    is always in cluster 1.
    """

    assignment: tuple

    def __post_init__(self):
        labels = tuple(int(x) for x in self.assignment)
        if not labels:
            raise ValueError("empty partition")
        if sorted(set(labels)) != list(range(1, max(labels) + 1)):
            raise ValueError("partition labels must cover 1..k")
        object.__setattr__(self, "assignment", labels)

    @property
    def k(self) -> int:
        return max(self.assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def clusters(self) -> list[list[int]]:
        out = [[] for _ in range(self.k)]
        for i, lab in enumerate(self.assignment):
            out[lab - 1].append(i)
        return out

    def sizes(self) -> list[int]:
        counts = Counter(self.assignment)
        return [counts[lab] for lab in range(1, self.k + 1)]

    @classmethod
    def from_roots(cls, roots) -> "Partition":
        relabel = {}
        for r in roots:
            relabel.setdefault(r, len(relabel) + 1)
        return cls(tuple(relabel[r] for r in roots))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        self.parent[max(ra, rb)] = min(ra, rb)


def _replay(dendro: Dendrogram, n_merges: int) -> Partition:
    n = dendro.n_leaves
    uf = _UnionFind(n)
    # any leaf of a cluster id stands in for the whole cluster
    rep = list(range(n))
    for m in dendro.merges[:n_merges]:
        uf.union(rep[m.left], rep[m.right])
        rep.append(rep[m.left])
    return Partition.from_roots([uf.find(i) for i in range(n)])


def cut_at_count(dendro: Dendrogram, k: int) -> Partition:
    """Partition into ``k`` clusters after the first ``n - k`` merges."""
    if not 1 <= k <= dendro.n_leaves:
        raise ValueError(f"k={k} outside 1..{dendro.n_leaves}")
    return _replay(dendro, dendro.n_leaves - k)


def cut_at_height(dendro: Dendrogram, d: float) -> Partition:
    """Apply merges in order, stopping before the first one higher than ``d``.

    With backsteps this is a prefix of the merge sequence, not a filter on
    heights, so cuts at increasing ``d`` stay nested.
    """
    count = 0
    for m in dendro.merges:
        if m.height > d:
            break
        count += 1
    return _replay(dendro, count)


def _entropy_from_sizes(sizes, n: int) -> float:
    return -math.fsum((s / n) * math.log(s / n) for s in sizes)


def cluster_entropy(p: Partition, n_elements: int | None = None) -> float:
    """Shannon entropy (natural log) of the cluster-size fractions."""
    n = p.n if n_elements is None else n_elements
    if n != p.n:
        raise ValueError(f"partition covers {p.n} elements, not {n_elements}")
    return _entropy_from_sizes(p.sizes(), n)


@dataclass(frozen=True)
class EntropyPoint:
    step: int
    height: float
    n_clusters: int
    entropy: float


@dataclass(frozen=True)
class EntropyCurve:
    points: tuple

    def entropies(self) -> np.ndarray:
        return np.array([p.entropy for p in self.points])

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def entropy_curve(dendro: Dendrogram) -> EntropyCurve:
    """Entropy at every level, from ``n`` singletons (step 0) to one cluster.

    Step 0 carries height 0; step ``s`` carries the height of merge ``s``.
    """
    n = dendro.n_leaves
    size = [1] * n
    live = Counter({1: n})  # cluster size -> how many clusters have it
    pts = [EntropyPoint(0, 0.0, n, _entropy_from_sizes([1] * n, n))]
    for m in dendro.merges:
        a, b = size[m.left], size[m.right]
        size.append(a + b)
        live[a] -= 1
        live[b] -= 1
        live[a + b] += 1
        sizes = [s for s, c in live.items() for _ in range(c)]
        pts.append(EntropyPoint(m.step, m.height, n - m.step, _entropy_from_sizes(sorted(sizes), n)))
    return EntropyCurve(tuple(pts))


def detect_backsteps(dendro: Dendrogram) -> list[int]:
    """Steps whose height is strictly below the running maximum of earlier heights."""
    out = []
    running = -math.inf
    for m in dendro.merges:
        if m.height < running:
            out.append(m.step)
        running = max(running, m.height)
    return out


def backstep_drops(dendro: Dendrogram) -> dict[int, float]:
    """Map each backstep to how far it falls below the running maximum."""
    drops = {}
    running = -math.inf
    for m in dendro.merges:
        if m.height < running:
            drops[m.step] = running - m.height
        running = max(running, m.height)
    return drops
