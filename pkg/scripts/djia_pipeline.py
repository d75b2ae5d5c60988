"""Prices -> log-returns -> correlation distances -> dendrograms.

Uses the synthetic sector-factor price table unless ``--prices`` points at a
real price CSV (``date`` column followed by one column per ticker).

    python scripts/djia_pipeline.py --out runs/djia
    python scripts/djia_pipeline.py --prices closes_1998.csv --out runs/djia98
"""

import argparse
from pathlib import Path

from hausclust import agglomerate, build_distance_matrix, cut_at_count, entropy_curve
from hausclust.datasets import DJIA_SECTORS, synthetic_prices
from hausclust.io import read_price_csv, write_dendrogram, write_entropy_csv, write_matrix_csv
from hausclust.linkage import LINKAGES


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prices", type=Path)
    ap.add_argument("--days", type=int, default=253)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--k", type=int, default=6, help="number of clusters to report")
    ap.add_argument("--out", type=Path, default=Path("runs/djia"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    table = read_price_csv(args.prices) if args.prices else synthetic_prices(args.days, seed=args.seed)
    D = build_distance_matrix(table.returns(), "correlation")
    write_matrix_csv(D, args.out / "distances.csv")

    for kind in LINKAGES:
        dendro = agglomerate(D, kind)
        write_dendrogram(dendro, args.out / f"{kind}.json")
        write_entropy_csv(entropy_curve(dendro), args.out / f"{kind}_entropy.csv")
        print(f"\n{kind} linkage, {args.k} clusters:")
        for members in cut_at_count(dendro, args.k).clusters():
            tickers = [D.labels[i] for i in members]
            sectors = sorted({DJIA_SECTORS.get(t, "?") for t in tickers})
            print(f"  {' '.join(tickers):<40} {', '.join(sectors)}")


if __name__ == "__main__":
    main()
