"""Run the simulated examples and write one report per example.

Usage::

    python scripts/run_benchmarks.py --examples 1,2,3 --reps 100 --seed 42 --out results
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from gpsel.benchmark import EXAMPLES, run_replicates
from gpsel.data import write_report
from gpsel.methods import expand_methods
from gpsel.report import to_markdown


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--examples", default="all")
    ap.add_argument("--methods", default="all")
    ap.add_argument("--reps", type=int, default=100)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    ids = sorted(EXAMPLES) if args.examples == "all" else [int(s) for s in args.examples.split(",")]
    methods = expand_methods(args.methods)
    args.out.mkdir(parents=True, exist_ok=True)
    for i in ids:
        t0 = time.perf_counter()
        report = run_replicates(EXAMPLES[i], methods, reps=args.reps, seed=args.seed, jobs=args.jobs)
        write_report(report, args.out / f"example{i}", "both")
        print(f"example {i}: {time.perf_counter() - t0:.1f} s")
        print(to_markdown(report))


if __name__ == "__main__":
    main()
