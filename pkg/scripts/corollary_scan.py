#!/usr/bin/env python3
"""Compare the closed-form optimum tuples with the exact histogram maximiser over a wide range,
and list where the optimum tuple is not graphical (so the relaxation value is unreachable)."""

import argparse

from findex.histogram import f_from_histogram
from findex.partition import NoMajorSequence, corollary_gaps, exact_histogram_max, paper_major_sequence, residue_params
from findex.realization import bicyclic_realizable


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=120)
    ap.add_argument("--delta-max", type=int, default=14)
    args = ap.parse_args()

    gaps = corollary_gaps(args.n_max, args.delta_max)
    print(f"tuple/oracle gaps: {len(gaps)}")
    for g in gaps:
        print(f"  n={g.params.n} delta={g.params.delta}: tuple {g.tuple_value} < oracle {g.oracle_value}")

    print("non-graphical optima (delta, smallest n):")
    for delta in range(3, args.delta_max + 1):
        bad = []
        for n in range(delta + 1, args.n_max + 1):
            params = residue_params(n, delta)
            try:
                h = paper_major_sequence(params)
            except NoMajorSequence:
                h, _ = exact_histogram_max(params)
            if not bicyclic_realizable(h):
                bad.append((n, str(h), f_from_histogram(h)))
        if bad:
            print(f"  delta={delta}: {len(bad)} values of n, first {bad[0]}")


if __name__ == "__main__":
    main()
