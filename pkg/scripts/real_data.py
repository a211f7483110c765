"""Repeated random-split evaluation on a real CSV table.

Example (body fat, 13 anthropometric predictors)::

    python scripts/real_data.py data/bodyfat.csv BodyFat --n-train 151 --n-test 101 \
        --predictors Age,Weight,Height,Neck,Chest,Abdomen,Hip,Thigh,Knee,Ankle,Biceps,Forearm,Wrist

Pass ``--predictors`` whenever the table carries derived columns (such as
``Density`` in the body fat table) that should not enter the model space.
"""

from __future__ import annotations

import argparse

from gpsel.benchmark import real_data_protocol
from gpsel.data import load_csv
from gpsel.methods import expand_methods
from gpsel.report import to_markdown


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("path")
    ap.add_argument("response")
    ap.add_argument("--predictors", default=None, help="comma-separated; default all other columns")
    ap.add_argument("--n-train", type=int, required=True)
    ap.add_argument("--n-test", type=int, default=None)
    ap.add_argument("--splits", type=int, default=25)
    ap.add_argument("--folds", type=int, default=10)
    ap.add_argument("--methods", default="all")
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    preds = args.predictors.split(",") if args.predictors else None
    data = load_csv(args.path, args.response, preds)
    n_test = data.n - args.n_train if args.n_test is None else args.n_test
    report = real_data_protocol(data, args.n_train, n_test, splits=args.splits,
                                methods=expand_methods(args.methods), seed=args.seed,
                                folds=args.folds or None)
    print(to_markdown(report))
    print("\nselection frequencies")
    for row in report.rows:
        top = sorted(zip(row.frequencies, data.names), reverse=True)[:5]
        print(f"  {row.method:<8} " + ", ".join(f"{name} {f:.2f}" for f, name in top))


if __name__ == "__main__":
    main()
