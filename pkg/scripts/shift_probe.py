"""Location-shift probe: how selection degrades as the response mean grows.

For each ``k`` the training and test responses are shifted by ``10**k`` times
the regression sum of squares; methods that centre the response are
unaffected, the uncentred ones drift towards the null model.
"""

from __future__ import annotations

import argparse

from gpsel.benchmark import EXAMPLES, shift_probe
from gpsel.methods import expand_methods, method_label


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", default="0,1,2,3")
    ap.add_argument("--methods", default="NIMS,HG-3")
    ap.add_argument("--reps", type=int, default=100)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    ks = [int(s) for s in args.k.split(",")]
    methods = expand_methods(args.methods)
    reports = shift_probe(EXAMPLES[1], ks, reps=args.reps, seed=args.seed, methods=methods)
    print(f"{'k':>3} {'method':<8} {'MSE':>8} {'HITS':>6} {'FP':>6}")
    for k, rep in reports.items():
        for m in methods:
            r = rep.row(method_label(m))
            print(f"{k:>3} {method_label(m):<8} {r.mse:8.3f} {r.hits:6.2f} {r.fp:6.2f}")


if __name__ == "__main__":
    main()
