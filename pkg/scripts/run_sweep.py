#!/usr/bin/env python3
"""Audit every (n, delta) up to --n-max and write the table as JSON and CSV.

    python scripts/run_sweep.py --n-max 9 --jobs 4 --out results/
"""

import argparse
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from findex.report import run_sweep, sweep_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    pairs = sweep_pairs(4, args.n_max)
    with ProcessPoolExecutor(args.jobs) as pool:
        table = run_sweep(pairs, cap=max(9, args.n_max), jobs=args.jobs, executor=pool, timings=True,
                          progress=lambda r: print(f"n={r.n} delta={r.delta} {r.status}", file=sys.stderr))
    (args.out / f"sweep_n{args.n_max}.json").write_text(table.to_json())
    (args.out / f"sweep_n{args.n_max}.csv").write_text(table.to_csv())

    by_theorem = Counter((r.theorem, r.status) for r in table.rows)
    for (theorem, status), count in sorted(by_theorem.items()):
        print(f"{theorem:32s} {status:12s} {count}")


if __name__ == "__main__":
    main()
