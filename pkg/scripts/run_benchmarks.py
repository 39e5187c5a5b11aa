#!/usr/bin/env python3
"""Run the generation benchmarks and print a comparison table.

Measures, per benchmark type and depth, how long each strategy takes to
produce every inhabitant: "solver" (symbolic enumeration), "pruned"
(recursive enumeration that checks refinements per constructor field), and
"filter" (enumerate every raw shape, keep what the checker accepts).  A
strategy that blows its budget at one depth is skipped at larger depths.

    python3 scripts/run_benchmarks.py --depths 0-3 --budget 30 \
        --out bench.csv --plot-data plots/bench
"""
import argparse
import shlex
import sys
from pathlib import Path

from target.bench import (DEFAULT_BENCHMARKS, STRATEGIES, format_table,
                          run_benchmark, write_csv, write_plot_data)


def parse_depths(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        if "-" in part.lstrip("-")[1:]:  # a span like 2-5, not a negative
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return sorted(set(out))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depths", default="0-3",
                    help="comma list and/or spans, e.g. 1,2,4-6 (default 0-3)")
    ap.add_argument("--benchmarks", default=None,
                    help="only run benchmarks whose name contains this substring")
    ap.add_argument("--strategies", default=",".join(STRATEGIES),
                    help=f"comma list from {', '.join(STRATEGIES)}")
    ap.add_argument("--budget", type=float, default=60.0,
                    help="per-run time budget in seconds (default 60)")
    ap.add_argument("--solver", default=None,
                    help="solver command line (default: z3, then bundled fallback)")
    ap.add_argument("--parallel", type=int, default=1,
                    help="worker threads (default 1, sequential)")
    ap.add_argument("--out", default=None, help="also write results to this CSV file")
    ap.add_argument("--plot-data", default=None, metavar="STEM",
                    help="also write per-benchmark gnuplot data files STEM_<name>.dat")
    args = ap.parse_args(argv)

    specs = [b for b in DEFAULT_BENCHMARKS
             if args.benchmarks is None or args.benchmarks in b.name]
    if not specs:
        print(f"no benchmark matches {args.benchmarks!r}", file=sys.stderr)
        return 2
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    for s in strategies:
        if s not in STRATEGIES:
            print(f"unknown strategy {s!r}", file=sys.stderr)
            return 2

    results = run_benchmark(specs, parse_depths(args.depths), strategies,
                            budget=args.budget, parallel=args.parallel,
                            solver_cmd=shlex.split(args.solver) if args.solver else None)
    print(format_table(results))
    if args.out:
        write_csv(results, args.out)
        print(f"wrote {args.out}")
    if args.plot_data:
        Path(args.plot_data).parent.mkdir(parents=True, exist_ok=True)
        for path in write_plot_data(results, args.plot_data):
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
