"""Slow, independent reference computations used as test oracles.

Pure Python loops over raw nested lists; nothing here imports the package's
numeric paths.
"""

import math

import mpmath


def hp_euclidean(p, q, dps=50):
    with mpmath.workdps(dps):
        return float(mpmath.sqrt(mpmath.fsum((mpmath.mpf(a) - mpmath.mpf(b)) ** 2 for a, b in zip(p, q))))


def pairwise(points):
    n = len(points)
    return [[math.dist(points[i], points[j]) for j in range(n)] for i in range(n)]


def brute_single(A, B, d):
    return min(d[i][j] for i in A for j in B)


def brute_complete(A, B, d):
    return max(d[i][j] for i in A for j in B)


def brute_directed(A, B, d):
    return max(min(d[a][b] for b in B) for a in A)


def brute_hausdorff(A, B, d):
    return max(brute_directed(A, B, d), brute_directed(B, A, d))


BRUTE = {"single": brute_single, "complete": brute_complete, "hausdorff": brute_hausdorff}


def naive_agglomerate(d, linkage):
    """Reference agglomerator: full recomputation every step, lexicographic ties.

    Returns ``[(left, right, height), ...]``.
    """
    n = len(d)
    f = BRUTE[linkage]
    clusters = {i: [i] for i in range(n)}
    nxt = n
    out = []
    while len(clusters) > 1:
        best = None
        ids = sorted(clusters)
        for x in range(len(ids)):
            for y in range(x + 1, len(ids)):
                a, b = ids[x], ids[y]
                h = f(clusters[a], clusters[b], d)
                if best is None or h < best[2]:
                    best = (a, b, h)
        a, b, h = best
        clusters[nxt] = clusters.pop(a) + clusters.pop(b)
        nxt += 1
        out.append((a, b, h))
    return out


def replay_clusters(n, merges, count):
    """Sets of leaves after the first ``count`` merges, by id bookkeeping."""
    members = {i: frozenset([i]) for i in range(n)}
    nxt = n
    for left, right in merges[:count]:
        members[nxt] = members.pop(left) | members.pop(right)
        nxt += 1
    return set(members.values())


def hp_entropy(sizes, dps=50):
    n = sum(sizes)
    with mpmath.workdps(dps):
        return float(-mpmath.fsum(mpmath.mpf(s) / n * mpmath.log(mpmath.mpf(s) / n) for s in sizes))
