"""CSV and JSON formats for prices, returns, matrices, point sets and dendrograms.

Every CSV has a header row. Floats are written with ``repr`` so they
round-trip exactly (up to 17 significant digits).
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .analysis import EntropyCurve, detect_backsteps
from .datasets import LabeledPointSet
from .linkage import Dendrogram, Merge
from .metric_core import DistanceMatrix, PriceTable, ReturnSeries


class FormatError(ValueError):
    """Malformed input file."""


def fmt(x: float) -> str:
    return repr(float(x))


def _rows(path) -> list[list[str]]:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if not rows:
        raise FormatError(f"{path}: empty file")
    return rows


def _write(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _cell(value: str, row: int, col: str, path) -> float:
    try:
        x = float(value)
    except ValueError:
        raise FormatError(f"{path}: row {row}, column {col!r}: not a number: {value!r}") from None
    if not math.isfinite(x):
        raise FormatError(f"{path}: row {row}, column {col!r}: non-finite value {value!r}")
    return x


def _read_dated(path):
    rows = _rows(path)
    header = [h.strip() for h in rows[0]]
    if len(header) < 2 or header[0].lower() != "date":
        raise FormatError(f"{path}: header must start with 'date' followed by series labels")
    labels = header[1:]
    dates, values = [], []
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise FormatError(f"{path}: row {r} has {len(row)} fields, expected {len(header)}")
        dates.append(row[0].strip())
        values.append([_cell(v, r, labels[j], path) for j, v in enumerate(row[1:])])
    return labels, dates, np.array(values, dtype=float).reshape(len(dates), len(labels))


def read_price_csv(path) -> PriceTable:
    labels, dates, prices = _read_dated(path)
    if len(dates) < 2:
        raise FormatError(f"{path}: need at least 2 price rows")
    bad = np.argwhere(prices <= 0)
    if bad.size:
        r, c = bad[0]
        raise FormatError(
            f"{path}: row {r + 2} (date {dates[r]}), column {labels[c]!r}: "
            f"non-positive price {prices[r, c]!r}"
        )
    return PriceTable(labels, dates, prices)


def write_price_csv(table: PriceTable, path):
    _write(path, ["date", *table.labels],
           ([d, *map(fmt, row)] for d, row in zip(table.dates, table.prices)))


def read_returns_csv(path) -> tuple[list[str], list[ReturnSeries]]:
    labels, dates, values = _read_dated(path)
    if len(dates) < 2:
        raise FormatError(f"{path}: need at least 2 return rows")
    return dates, [ReturnSeries(values[:, j], lab) for j, lab in enumerate(labels)]


def write_returns_csv(dates, series, path):
    cols = np.column_stack([s.values for s in series])
    _write(path, ["date", *[s.label for s in series]],
           ([d, *map(fmt, row)] for d, row in zip(dates, cols)))


def read_matrix_csv(path) -> DistanceMatrix:
    rows = _rows(path)
    labels = [h.strip() for h in rows[0]]
    n = len(labels)
    body = rows[1:]
    if len(body) != n:
        raise FormatError(f"{path}: {n} labels but {len(body)} matrix rows")
    d = np.empty((n, n))
    for i, row in enumerate(body):
        if len(row) != n:
            raise FormatError(f"{path}: matrix row {i + 1} has {len(row)} fields, expected {n}")
        d[i] = [_cell(v, i + 2, labels[j], path) for j, v in enumerate(row)]
    try:
        return DistanceMatrix(d, labels)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_matrix_csv(D: DistanceMatrix, path):
    _write(path, D.labels, ([fmt(x) for x in row] for row in D.d))


def read_points_csv(path) -> LabeledPointSet:
    rows = _rows(path)
    header = [h.strip().lower() for h in rows[0]]
    if header[-1] != "group" or len(header) < 2:
        raise FormatError(f"{path}: point CSV needs coordinate columns and a final 'group' column")
    pts, groups = [], []
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise FormatError(f"{path}: row {r} has {len(row)} fields, expected {len(header)}")
        pts.append([_cell(v, r, header[j], path) for j, v in enumerate(row[:-1])])
        groups.append(row[-1].strip())
    if not pts:
        raise FormatError(f"{path}: no points")
    return LabeledPointSet(np.array(pts), tuple(groups))


def write_points_csv(ds: LabeledPointSet, path):
    dim = ds.points.shape[1]
    names = ["x", "y", "z"][:dim] if dim <= 3 else [f"x{i}" for i in range(dim)]
    _write(path, [*names, "group"],
           ([*map(fmt, p), g] for p, g in zip(ds.points, ds.group_labels)))


def is_points_csv(path) -> bool:
    header = _rows(path)[0]
    return header[-1].strip().lower() == "group"


def dendrogram_to_dict(dendro: Dendrogram) -> dict:
    return {
        "n_leaves": dendro.n_leaves,
        "labels": list(dendro.leaf_labels),
        "linkage": dendro.linkage,
        "merges": [
            {"left": m.left, "right": m.right, "height": m.height, "new_id": m.new_id, "step": m.step}
            for m in dendro.merges
        ],
        "backsteps": detect_backsteps(dendro),
    }


def dendrogram_from_dict(obj: dict) -> Dendrogram:
    try:
        n = int(obj["n_leaves"])
        merges = tuple(
            Merge(int(m["left"]), int(m["right"]), float(m["height"]),
                  int(m.get("new_id", n + s - 1)), int(m["step"]))
            for s, m in enumerate(obj["merges"], start=1)
        )
        return Dendrogram(n, tuple(obj["labels"]), obj["linkage"], merges)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid dendrogram: {exc}") from None


def write_dendrogram(dendro: Dendrogram, path):
    Path(path).write_text(json.dumps(dendrogram_to_dict(dendro), indent=2) + "\n", encoding="utf-8")


def read_dendrogram(path) -> Dendrogram:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected a JSON object")
    try:
        return dendrogram_from_dict(obj)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_entropy_csv(curve: EntropyCurve, path):
    _write(path, ["step", "height", "n_clusters", "entropy"],
           ([p.step, fmt(p.height), p.n_clusters, fmt(p.entropy)] for p in curve))
