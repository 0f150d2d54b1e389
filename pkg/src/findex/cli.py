"""Command-line interface: ``findex {compute,audit,major-seq,bound,realize,enumerate}``.

Exit codes: 0 success, 1 a VIOLATED record under ``--strict``, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext

from .bounds import VIOLATED, applicable_bound
from .enumeration import DEFAULT_CAP, EnumerationBudgetError, EnumSpec, enumerate_bicyclic
from .graph import cycle_rank, forgotten_index, is_bicyclic, is_connected, max_degree
from .histogram import DegreeHistogram, f_from_histogram, histogram_from_graph
from .io import ParseError, format_edge_list, read_graph, to_graph6
from .partition import NoMajorSequence, exact_histogram_max, paper_major_sequence, residue_params
from .realization import realize
from .report import run_sweep, sweep_pairs

log = logging.getLogger("findex")


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    raw = os.environ.get("FINDEX_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _cap(args) -> int:
    if args.unsafe_n_max is not None:
        print(f"warning: enumeration cap raised to n <= {args.unsafe_n_max}; "
              "runtime grows steeply past 9", file=sys.stderr)
        return args.unsafe_n_max
    return DEFAULT_CAP


def _check_pair(n: int, delta: int):
    if delta < 3:
        raise UsageError(f"--delta must be >= 3 (got {delta})")
    if n < delta + 1:
        raise UsageError(f"need n >= delta + 1 (got n={n}, delta={delta})")


def cmd_compute(args) -> int:
    if args.path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.path) as fh:
            text = fh.read()
    g = read_graph(text, args.format)
    try:
        hist = histogram_from_graph(g)
    except ValueError:
        hist = None
    result = {
        "F": forgotten_index(g, verify=True),
        "n": g.n,
        "m": g.m,
        "delta": max_degree(g),
        "connected": is_connected(g),
        "cycle_rank": cycle_rank(g),
        "bicyclic": is_bicyclic(g, require_connected=not args.allow_disconnected),
        "histogram": None if hist is None else hist.to_json(),
    }
    if args.json:
        print(json.dumps(result))
    else:
        h = "n/a" if hist is None else str(hist)
        print(f"F={result['F']} n={g.n} m={g.m} delta={result['delta']} "
              f"bicyclic={str(result['bicyclic']).lower()} histogram={h}")
    return 0


def cmd_audit(args) -> int:
    cap = _cap(args)
    if args.n is not None:
        if args.delta is not None:
            _check_pair(args.n, args.delta)
        elif args.n < 4:
            raise UsageError("--n must be >= 4")
        pairs = sweep_pairs(args.n, args.n, args.delta)
    elif args.n_max is not None:
        if args.n_max < args.n_min or args.n_min < 4:
            raise UsageError("need 4 <= --n-min <= --n-max")
        pairs = sweep_pairs(args.n_min, args.n_max, args.delta)
    else:
        raise UsageError("give --n (optionally with --delta) or --n-max")
    if not pairs:
        raise UsageError("no (n, delta) pairs in range")

    def progress(rec):
        print(f"[audit] n={rec.n} delta={rec.delta} {rec.status}", file=sys.stderr)

    pool = ProcessPoolExecutor(max_workers=args.jobs) if args.jobs > 1 else nullcontext()
    with pool as executor:
        table = run_sweep(pairs, cap=cap, jobs=args.jobs, executor=executor,
                          at_most=args.at_most_delta, timings=args.timings,
                          stamp=args.stamp, progress=progress)
    text = table.to_json() if args.format == "json" else table.to_csv()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.strict and any(r.status == VIOLATED for r in table.rows):
        return 1
    return 0


def cmd_major_seq(args) -> int:
    _check_pair(args.n, args.delta)
    params = residue_params(args.n, args.delta)
    if args.oracle:
        h, value = exact_histogram_max(params)
        print(f"{h} F={value}")
        return 0
    try:
        h = paper_major_sequence(params)
    except NoMajorSequence as exc:
        print(f"error: {exc}; use --oracle for the exact histogram maximum", file=sys.stderr)
        return 2
    print(f"{h} F={f_from_histogram(h)}")
    return 0


def cmd_bound(args) -> int:
    _check_pair(args.n, args.delta)
    b = applicable_bound(args.n, args.delta)
    value = "null" if b.value is None else b.value
    print(f"theorem={b.theorem} value={value}")
    return 0


def cmd_realize(args) -> int:
    try:
        counts = tuple(int(x) for x in args.histogram.split(","))
        h = DegreeHistogram(len(counts), counts)
    except ValueError as exc:
        raise UsageError(f"bad histogram {args.histogram!r}: {exc}") from None
    try:
        g = realize(h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(to_graph6(g))
    sys.stdout.write(format_edge_list(g))
    return 0


def cmd_enumerate(args) -> int:
    cap = _cap(args)
    kw = {"delta_max": args.delta} if args.at_most else {"delta_exact": args.delta}
    try:
        spec = EnumSpec(args.n, dedup=args.mode == "dedup", symmetry_break=args.mode == "sorted",
                        parallel_jobs=1 if args.list else args.jobs, **kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    visitor = None
    if args.list:
        listed = []
        visitor = lambda g: listed.append(to_graph6(g))  # noqa: E731
    try:
        summary = enumerate_bicyclic(spec, visitor, cap=cap)
    except EnumerationBudgetError as exc:
        raise UsageError(f"{exc}; pass --unsafe-n-max to override") from None
    if args.list:
        for s in listed:
            print(s)
    print(f"count={summary.count} max_f={summary.max_f} argmax={','.join(summary.argmax)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="findex", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="F and structure of one graph")
    p.add_argument("path", nargs="?", help="edge-list or graph6 file (default stdin)")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.add_argument("--json", action="store_true")
    p.add_argument("--allow-disconnected", action="store_true",
                   help="call any graph with m = n + 1 bicyclic")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("audit", help="closed form vs relaxation vs enumeration")
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--output")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--strict", action="store_true", help="exit 1 if any bound is violated")
    p.add_argument("--unsafe-n-max", type=int, metavar="N")
    p.add_argument("--at-most-delta", action="store_true",
                   help="enumerate max degree <= delta instead of == delta")
    p.add_argument("--timings", action="store_true", help="record real runtimes")
    p.add_argument("--stamp", action="store_true", help="record the run date")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("major-seq", help="closed-form optimum histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="exact histogram maximum instead")
    p.set_defaults(func=cmd_major_seq)

    p = sub.add_parser("bound", help="applicable closed-form bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("realize", help="connected graph with a given histogram")
    p.add_argument("--histogram", required=True, help="comma-separated n_1,...,n_delta")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("enumerate", help="enumerate bicyclic graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--at-most", action="store_true", help="treat --delta as an upper bound")
    p.add_argument("--mode", choices=("dedup", "sorted", "labeled"), default="dedup")
    p.add_argument("--list", action="store_true", help="print every visited graph as graph6")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--unsafe-n-max", type=int, metavar="N")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
