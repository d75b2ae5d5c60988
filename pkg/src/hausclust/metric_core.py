"""Point and time-series metrics, distance matrices, and metric-axiom diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class ReturnSeries:
    """Log-returns of one instrument over a fixed window."""

    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size < 1:
            raise ValueError(f"return series {self.label!r} is empty")
        if not np.all(np.isfinite(values)):
            raise ValueError(f"return series {self.label!r} has non-finite values")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.values.size


@dataclass(frozen=True)
class PriceTable:
    """Daily closure prices, one column per label.

    ``prices`` has shape ``(len(dates), len(labels))``.
    """

    labels: list[str]
    dates: list[str]
    prices: np.ndarray

    def __post_init__(self):
        prices = np.asarray(self.prices, dtype=float)
        if prices.shape != (len(self.dates), len(self.labels)):
            raise ValueError(
                f"price array shape {prices.shape} does not match "
                f"{len(self.dates)} dates x {len(self.labels)} labels"
            )
        bad = ~np.isfinite(prices) | (prices <= 0)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            raise ValueError(
                f"invalid price {prices[row, col]!r} at date {self.dates[row]!r}, "
                f"column {self.labels[col]!r}"
            )
        object.__setattr__(self, "prices", prices)

    def series(self, label: str) -> np.ndarray:
        return self.prices[:, self.labels.index(label)]

    def returns(self) -> list[ReturnSeries]:
        return [log_returns(self.prices[:, j], label) for j, label in enumerate(self.labels)]


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric, nonnegative, zero-diagonal matrix of pairwise distances.

    The invariants are checked exactly on construction. Use
    :func:`check_metric_axioms` for the triangle inequality.
    """

    d: np.ndarray
    labels: list[str] = field(default=None)

    def __post_init__(self):
        d = np.array(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] < 1:
            raise ValueError(f"distance matrix must be square and nonempty, got shape {d.shape}")
        if not np.all(np.isfinite(d)):
            raise ValueError("distance matrix has non-finite entries")
        if np.any(np.diag(d) != 0):
            i = int(np.flatnonzero(np.diag(d))[0])
            raise ValueError(f"distance matrix has nonzero diagonal entry at {i}")
        if np.any(d < 0):
            i, j = np.argwhere(d < 0)[0]
            raise ValueError(f"distance matrix has negative entry at ({i}, {j})")
        if np.any(d != d.T):
            i, j = np.argwhere(d != d.T)[0]
            raise ValueError(f"distance matrix is not symmetric at ({i}, {j})")
        d.setflags(write=False)
        object.__setattr__(self, "d", d)
        labels = self.labels
        if labels is None:
            labels = [str(i) for i in range(d.shape[0])]
        labels = [str(x) for x in labels]
        if len(labels) != d.shape[0]:
            raise ValueError(f"{len(labels)} labels for a {d.shape[0]}x{d.shape[0]} matrix")
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __getitem__(self, idx):
        return self.d[idx]


def euclidean_distance(p: Sequence[float], q: Sequence[float]) -> float:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape or p.ndim != 1:
        raise ValueError(f"dimension mismatch: {p.shape} vs {q.shape}")
    return math.hypot(*(p - q))


def log_returns(prices: Sequence[float], label: str = "") -> ReturnSeries:
    """``X(t) = ln(P(t) / P(t-1))``; one value shorter than the price list."""
    prices = np.asarray(prices, dtype=float)
    if prices.ndim != 1 or prices.size < 2:
        raise ValueError("need at least 2 prices to form a return")
    bad = ~np.isfinite(prices) | (prices <= 0)
    if bad.any():
        t = int(np.flatnonzero(bad)[0])
        raise ValueError(f"non-positive or non-finite price {prices[t]!r} at position {t}")
    return ReturnSeries(np.log(prices[1:] / prices[:-1]), label)


def _values(x) -> np.ndarray:
    return x.values if isinstance(x, ReturnSeries) else np.asarray(x, dtype=float)


def correlation(x, y) -> float:
    """Pearson correlation with population moments, clamped to [-1, 1].

    Accepts :class:`ReturnSeries` or plain sequences.
    """
    x, y = _values(x), _values(y)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    if x.size < 2:
        raise ValueError("need at least 2 observations")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = np.dot(dx, dx)
    syy = np.dot(dy, dy)
    if sxx == 0 or syy == 0:
        raise ValueError("zero variance series")
    # the 1/N factors of covariance and both deviations cancel.
    # sqrt(s*s) == s exactly, so identical or negated series give exactly +-1
    denom = math.sqrt(sxx * syy)
    if denom == 0 or not math.isfinite(denom):
        denom = math.sqrt(sxx) * math.sqrt(syy)
    rho = np.dot(dx, dy) / denom
    return float(min(1.0, max(-1.0, rho)))


def correlation_distance(rho: float) -> float:
    """``sqrt(2 (1 - rho))``: 0 for perfect correlation, 2 for anticorrelation."""
    if not -1.0 <= rho <= 1.0:
        raise ValueError(f"correlation {rho!r} outside [-1, 1]")
    return math.sqrt(2.0 * (1.0 - rho))


def build_distance_matrix(items, metric: str = "euclidean", labels=None) -> DistanceMatrix:
    """Pairwise distance matrix over points or return series.

    ``metric`` is ``"euclidean"`` for coordinate points (rows of an array or a
    list of sequences) or ``"correlation"`` for return series. Each unordered
    pair is evaluated once and mirrored, so symmetry is exact.
    """
    if metric == "euclidean":
        pts = np.asarray(items, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise ValueError("need at least one point")
        if not np.all(np.isfinite(pts)):
            raise ValueError("non-finite point coordinates")
        n = pts.shape[0]
        d = np.zeros((n, n))
        for i in range(n - 1):
            diff = pts[i + 1:] - pts[i]
            d[i, i + 1:] = np.sqrt(np.einsum("ij,ij->i", diff, diff))
    elif metric == "correlation":
        series = [s if isinstance(s, ReturnSeries) else ReturnSeries(s) for s in items]
        if not series:
            raise ValueError("need at least one series")
        if labels is None:
            labels = [s.label or str(i) for i, s in enumerate(series)]
        n = len(series)
        d = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                try:
                    d[i, j] = correlation_distance(correlation(series[i], series[j]))
                except ValueError as exc:
                    raise ValueError(f"{labels[i]} vs {labels[j]}: {exc}") from None
    else:
        raise ValueError(f"unknown metric {metric!r}")
    d = d + d.T
    return DistanceMatrix(d, labels)


@dataclass
class MetricReport:
    """Violations found by :func:`check_metric_axioms`.

    ``triangle`` holds ``(i, j, k)`` with ``d[i, j] > d[i, k] + d[k, j] + tol``.
    ``zero_distance`` lists distinct pairs at zero distance (pseudometric only).
    """

    nonzero_diagonal: list[int] = field(default_factory=list)
    negative: list[tuple[int, int]] = field(default_factory=list)
    asymmetric: list[tuple[int, int]] = field(default_factory=list)
    zero_distance: list[tuple[int, int]] = field(default_factory=list)
    triangle: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.nonzero_diagonal or self.negative or self.asymmetric
            or self.zero_distance or self.triangle
        )

    @property
    def is_pseudometric(self) -> bool:
        return not (self.nonzero_diagonal or self.negative or self.asymmetric or self.triangle)


def check_metric_axioms(D, tolerance: float = 1e-9) -> MetricReport:
    """Brute-force O(n^3) scan of the metric axioms, each up to ``tolerance``.

    ``D`` may be a :class:`DistanceMatrix` or any square array, so that
    matrices rejected by the constructor can still be diagnosed.
    """
    d = np.asarray(D.d if isinstance(D, DistanceMatrix) else D, dtype=float)
    n = d.shape[0]
    rep = MetricReport()
    rep.nonzero_diagonal = [int(i) for i in np.flatnonzero(np.abs(np.diag(d)) > tolerance)]
    iu, ju = np.triu_indices(n, k=1)
    rep.negative = [(int(i), int(j)) for i, j in np.argwhere(d < -tolerance)]
    asym = np.abs(d[iu, ju] - d[ju, iu]) > tolerance
    rep.asymmetric = [(int(i), int(j)) for i, j in zip(iu[asym], ju[asym])]
    zero = (np.abs(d[iu, ju]) <= tolerance) | (np.abs(d[ju, iu]) <= tolerance)
    rep.zero_distance = [(int(i), int(j)) for i, j in zip(iu[zero], ju[zero])]
    for k in range(n):
        via = d[:, k][:, None] + d[k, :][None, :]
        bad = d > via + tolerance
        bad[k, :] = bad[:, k] = False
        for i, j in np.argwhere(bad):
            rep.triangle.append((int(i), int(j), k))
    rep.triangle.sort()
    return rep
