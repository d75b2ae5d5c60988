"""Deterministic benchmark geometries and a synthetic price generator."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metric_core import PriceTable


@dataclass(frozen=True)
class LabeledPointSet:
    """Planar points, each tagged with the group it was generated from."""

    points: np.ndarray
    group_labels: tuple

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] != len(self.group_labels):
            raise ValueError("points and group labels must align")
        if not np.all(np.isfinite(pts)):
            raise ValueError("non-finite coordinates")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "group_labels", tuple(self.group_labels))

    def __len__(self):
        return self.points.shape[0]

    def groups(self) -> list[str]:
        """Distinct tags in order of first appearance."""
        return list(dict.fromkeys(self.group_labels))

    def indices(self, group: str) -> list[int]:
        return [i for i, g in enumerate(self.group_labels) if g == group]

    def point_labels(self) -> list[str]:
        return [f"{g}:{i}" for i, g in enumerate(self.group_labels)]


def _circle(center, radius, count, start=0.0, mirror=False):
    theta = start + 2 * np.pi * np.arange(count) / count
    x = radius * np.cos(theta)
    y = radius * np.sin(theta)
    if mirror:
        x = -x
    return np.column_stack([center[0] + x, center[1] + y])


def _build(parts) -> LabeledPointSet:
    points = np.vstack([np.asarray(p, dtype=float) for _, p in parts])
    tags = [tag for tag, p in parts for _ in range(len(p))]
    return LabeledPointSet(points, tuple(tags))


def glasses_dataset() -> LabeledPointSet:
    """71 points: two 31-point rims, a 5-point bar and two 2-point pupils.

    Rims are unit circles centred at (-2.5, 0) and (2.5, 0), mirror images of
    each other, each with a point on the x axis facing the bar. The bar fills
    the gap between those two inner points at spacing 0.5.
    """
    left = _circle((-2.5, 0.0), 1.0, 31)
    right = _circle((2.5, 0.0), 1.0, 31, mirror=True)
    bar = np.column_stack([np.linspace(-1.0, 1.0, 5), np.zeros(5)])
    return _build([
        ("left-glass", left),
        ("right-glass", right),
        ("bar", bar),
        ("left-pupil", [(-2.55, 0.0), (-2.45, 0.0)]),
        ("right-pupil", [(2.45, 0.0), (2.55, 0.0)]),
    ])


def concentric_dataset(inner_count=16, outer_count=32, r_inner=1.0, r_outer=4.0) -> LabeledPointSet:
    if inner_count < 3 or outer_count < 3:
        raise ValueError("each ring needs at least 3 points")
    if not 0 < r_inner < r_outer:
        raise ValueError("radii must satisfy 0 < r_inner < r_outer")
    return _build([
        ("inner", _circle((0.0, 0.0), r_inner, inner_count)),
        ("outer", _circle((0.0, 0.0), r_outer, outer_count)),
    ])


def single_triangle_counterexample() -> LabeledPointSet:
    """Three two-point sets on a line where single linkage breaks the triangle inequality.

    A = {0, 1}, C = {4, 6}, B = {9, 10}: the closest A-B pair is 8 apart,
    while A-C and C-B are each 3 apart.
    """
    return _build([
        ("A", [(0.0, 0.0), (1.0, 0.0)]),
        ("B", [(9.0, 0.0), (10.0, 0.0)]),
        ("C", [(4.0, 0.0), (6.0, 0.0)]),
    ])


def backstep_dataset() -> LabeledPointSet:
    """Two stacked segments inside a U, arranged to produce a Hausdorff backstep.

    A (y = 1) and B (y = 0) are 5-point samples of [-0.5, 0.5]. C is a U with
    arms at x = +-0.75 from y = -0.5 to 1.25 and a base at y = -0.5. Then
    d_H(A, B) = 1 is below d_H(A, C) and d_H(B, C), yet d_H(A u B, C) ~ 0.757.
    Hausdorff agglomeration of the 27 points ends with a merge lower than
    the one before it.
    """
    xs = [-0.5, -0.25, 0.0, 0.25, 0.5]
    arm = [-0.5, -0.15, 0.2, 0.55, 0.9, 1.25]
    u_shape = (
        [(-0.75, y) for y in reversed(arm)]
        + [(x, -0.5) for x in xs]
        + [(0.75, y) for y in arm]
    )
    return _build([
        ("A", [(x, 1.0) for x in xs]),
        ("B", [(x, 0.0) for x in xs]),
        ("C", u_shape),
    ])


DATASETS = {
    "glasses": glasses_dataset,
    "concentric": concentric_dataset,
    "backstep": backstep_dataset,
    "triangle": single_triangle_counterexample,
}


# Dow Jones Industrial Average constituents, 1998-2002, with sectors.
DJIA_SECTORS = {
    "AA": "Basic Materials",
    "AXP": "Financial",
    "BA": "Capital Goods",
    "C": "Financial",
    "CAT": "Capital Goods",
    "DD": "Basic Materials",
    "DIS": "Services",
    "EK": "Consumer Cyclical",
    "GE": "Conglomerates",
    "GM": "Consumer Cyclical",
    "HD": "Services",
    "HON": "Capital Goods",
    "HPQ": "Technology",
    "IBM": "Technology",
    "INTC": "Technology",
    "IP": "Basic Materials",
    "JNJ": "Healthcare",
    "JPM": "Financial",
    "KO": "Consumer Non-Cyclical",
    "MCD": "Services",
    "MMM": "Conglomerates",
    "MO": "Consumer Non-Cyclical",
    "MRK": "Healthcare",
    "MSFT": "Technology",
    "PG": "Consumer Non-Cyclical",
    "SBC": "Services",
    "T": "Services",
    "UTX": "Conglomerates",
    "WMT": "Services",
    "XOM": "Energy",
}
DJIA_TICKERS = tuple(DJIA_SECTORS)


def synthetic_prices(
    n_days: int = 253,
    labels=DJIA_TICKERS,
    seed: int = 0,
    start: str = "1998-01-02",
    sectors: dict | None = None,
) -> PriceTable:
    """Correlated geometric random walks with a market and a sector factor.

    Daily log-return = drift + 0.008 market + 0.008 sector + 0.012 noise, all
    factors standard normal. Dates are consecutive business days.
    """
    if n_days < 2:
        raise ValueError("need at least 2 days")
    labels = list(labels)
    sectors = DJIA_SECTORS if sectors is None else sectors
    rng = np.random.default_rng(seed)
    names = sorted({sectors.get(lab, lab) for lab in labels})
    steps = n_days - 1
    market = rng.standard_normal(steps)
    factor = dict(zip(names, rng.standard_normal((len(names), steps))))
    noise = rng.standard_normal((len(labels), steps))
    cols = []
    for j, lab in enumerate(labels):
        r = 0.0003 + 0.008 * market + 0.008 * factor[sectors.get(lab, lab)] + 0.012 * noise[j]
        p0 = 20.0 + 80.0 * rng.random()
        cols.append(p0 * np.exp(np.concatenate([[0.0], np.cumsum(r)])))
    days = np.busday_offset(np.datetime64(start), np.arange(n_days), roll="forward")
    return PriceTable(labels, [str(d) for d in days], np.column_stack(cols))

