"""Command-line entry point: ``hausclust <command> ...``.

Each ``cmd_*`` function does one command's work on explicit paths and is
what the parser dispatches to. Errors exit with status 1 and a one-line
message on stderr; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import io
from .analysis import entropy_curve
from .datasets import DATASETS, synthetic_prices
from .linkage import LINKAGES, agglomerate
from .metric_core import build_distance_matrix
from .render import render_svg

TIES = {"lex": "lexicographic", "random": "random"}


@dataclass
class RunConfig:
    command: str
    output: Path
    input: Optional[Path] = None
    name: Optional[str] = None
    linkage: str = "hausdorff"
    ties: str = "lex"
    seed: Optional[int] = None
    days: int = 253


def cmd_dataset(name: str, out) -> None:
    if name not in DATASETS:
        raise ValueError(f"unknown dataset {name!r}; choose from {', '.join(DATASETS)}")
    io.write_points_csv(DATASETS[name](), out)


def cmd_prices(out, days: int = 253, seed: int = 0) -> None:
    io.write_price_csv(synthetic_prices(n_days=days, seed=seed), out)


def cmd_returns(prices, out) -> None:
    table = io.read_price_csv(prices)
    io.write_returns_csv(table.dates[1:], table.returns(), out)


def cmd_distances(returns, out) -> None:
    _, series = io.read_returns_csv(returns)
    if len(series) < 2:
        raise ValueError(f"{returns}: need at least 2 series")
    io.write_matrix_csv(build_distance_matrix(series, "correlation"), out)


def load_matrix(path):
    """Distance matrix from a matrix CSV, or Euclidean distances of a point CSV."""
    if io.is_points_csv(path):
        ds = io.read_points_csv(path)
        return build_distance_matrix(ds.points, "euclidean", labels=ds.point_labels())
    return io.read_matrix_csv(path)


def cmd_cluster(path, linkage: str, out, ties: str = "lex", seed: Optional[int] = None) -> None:
    if linkage not in LINKAGES:
        raise ValueError(f"unknown linkage {linkage!r}")
    D = load_matrix(path)
    io.write_dendrogram(agglomerate(D, linkage, TIES[ties], seed), out)


def cmd_entropy(dendro, out) -> None:
    io.write_entropy_csv(entropy_curve(io.read_dendrogram(dendro)), out)


def cmd_render(dendro, out) -> None:
    Path(out).write_text(render_svg(io.read_dendrogram(dendro)), encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hausclust", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dataset", help="write a benchmark point set as CSV")
    s.add_argument("name", choices=list(DATASETS))
    s.add_argument("--output", required=True, type=Path)

    s = sub.add_parser("prices", help="write a synthetic 30-ticker price table")
    s.add_argument("--days", type=int, default=253)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--output", required=True, type=Path)

    s = sub.add_parser("returns", help="daily log-returns of a price table")
    s.add_argument("--prices", dest="input", required=True, type=Path)
    s.add_argument("--output", required=True, type=Path)

    s = sub.add_parser("distances", help="correlation distance matrix of a returns table")
    s.add_argument("--returns", dest="input", required=True, type=Path)
    s.add_argument("--output", required=True, type=Path)

    s = sub.add_parser("cluster", help="agglomerate a distance matrix or point CSV")
    s.add_argument("--input", required=True, type=Path)
    s.add_argument("--linkage", required=True, choices=LINKAGES)
    s.add_argument("--ties", choices=list(TIES), default="lex")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--output", required=True, type=Path)

    s = sub.add_parser("entropy", help="cluster entropy at every dendrogram level")
    s.add_argument("--dendrogram", dest="input", required=True, type=Path)
    s.add_argument("--output", required=True, type=Path)

    s = sub.add_parser("render", help="draw a dendrogram as SVG")
    s.add_argument("--dendrogram", dest="input", required=True, type=Path)
    s.add_argument("--output", required=True, type=Path)
    return p


def run(cfg: RunConfig) -> None:
    if cfg.input is not None and not cfg.input.is_file():
        raise FileNotFoundError(f"input file not found: {cfg.input}")
    if cfg.command == "dataset":
        cmd_dataset(cfg.name, cfg.output)
    elif cfg.command == "prices":
        cmd_prices(cfg.output, cfg.days, cfg.seed or 0)
    elif cfg.command == "returns":
        cmd_returns(cfg.input, cfg.output)
    elif cfg.command == "distances":
        cmd_distances(cfg.input, cfg.output)
    elif cfg.command == "cluster":
        cmd_cluster(cfg.input, cfg.linkage, cfg.output, cfg.ties, cfg.seed)
    elif cfg.command == "entropy":
        cmd_entropy(cfg.input, cfg.output)
    elif cfg.command == "render":
        cmd_render(cfg.input, cfg.output)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    try:
        run(cfg)
    except (ValueError, OSError) as exc:
        msg = " ".join(str(exc).split())
        print(f"hausclust: error: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
