"""Command-line entry point: ``gpsel <command> [options]``.

Exit status is 0 on success, 1 on a usage error and 2 when the run itself
fails.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bayes import SelectorSpec, fit_selector
from .benchmark import EXAMPLES, generate_example, real_data_protocol, records_to_csv, \
    run_replicates, shift_probe
from .data import load_config, load_csv, write_csv, write_report
from .errors import GpselError
from .methods import ORACLE, expand_methods, method_label
from .regularizers import kfold_folds, tune

log = logging.getLogger("gpsel")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=None, help="master seed (default 0, or GPSEL_SEED)")
    p.add_argument("--reps", type=int, default=None, help="replicates / splits")
    p.add_argument("--out", default=None, help="output directory (default: results)")
    p.add_argument("--format", choices=("csv", "md", "both"), default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: available cores)")
    return p


def _data_args(p, required=True):
    p.add_argument("--data", required=required, help="CSV file with a header row")
    p.add_argument("--response", required=required, help="response column name")
    p.add_argument("--predictors", default=None, help="comma-separated predictor columns")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="gpsel", description="Bayesian variable selection under g-priors "
                     "with regularization baselines.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("simulate", parents=[common], help="write one simulated draw to CSV")
    p.add_argument("--example", type=int, required=True, choices=range(1, 7))
    p.add_argument("--n", type=int, default=15)
    p.add_argument("--n-test", type=int, default=200)
    p.add_argument("--rep", type=int, default=0, help="replicate index")

    p = sub.add_parser("select", parents=[common], help="score the model space of a dataset")
    _data_args(p)
    p.add_argument("--method", default="NIMS", help="comma-separated methods")
    p.add_argument("--top", type=int, default=5)

    p = sub.add_parser("predict", parents=[common], help="model-averaged predictions for new rows")
    _data_args(p)
    p.add_argument("--new", required=True, help="CSV with the predictor columns")
    p.add_argument("--method", default="NIMS")

    p = sub.add_parser("bench", parents=[common], help="simulated-example benchmark")
    p.add_argument("--example", default=None, help="example id(s), comma-separated, or 'all'")
    p.add_argument("--methods", default=None, help="comma-separated methods, or 'all'")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-test", type=int, default=None)
    p.add_argument("--config", default=None, help="key = value experiment file")

    p = sub.add_parser("probe-shift", parents=[common], help="location-shift probe on Example 1")
    p.add_argument("--k", default=None, help="comma-separated exponents (default 1,2,3)")
    p.add_argument("--methods", default=None, help="default NIMS")
    p.add_argument("--config", default=None)

    p = sub.add_parser("realdata", parents=[common], help="repeated-split real-data protocol")
    _data_args(p, required=False)
    p.add_argument("--n-train", type=int, default=None)
    p.add_argument("--n-test", type=int, default=None)
    p.add_argument("--folds", type=int, default=None,
                   help="CV folds for regularizers (default 10, 0 = leave-one-out)")
    p.add_argument("--methods", default=None, help="default all")
    p.add_argument("--config", default=None)
    return parser


def _seed(args, fallback: int = 0) -> int:
    if args.seed is not None:
        return args.seed
    if "GPSEL_SEED" in os.environ:
        return int(os.environ["GPSEL_SEED"])
    return fallback


def _jobs(args) -> int:
    if args.jobs is not None:
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return args.jobs
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1


def _out(args, fallback: str = "results") -> Path:
    path = Path(args.out or fallback)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _load(args):
    preds = args.predictors.split(",") if args.predictors else None
    return load_csv(args.data, args.response, preds)


def _positive(value, name):
    if value is not None and value < 1:
        raise UsageError(f"--{name} must be >= 1")


# ---------------------------------------------------------------------------
# commands


def cmd_simulate(args) -> int:
    out = _out(args)
    seed = _seed(args)
    train, test = generate_example(EXAMPLES[args.example], args.n, args.n_test, seed, args.rep)
    for ds, tag in ((train, "train"), (test, "test")):
        path = out / f"example{args.example}_{tag}.csv"
        write_csv(ds, path)
        print(path)
    return 0


def cmd_select(args) -> int:
    data = _load(args)
    for method in expand_methods(args.method, with_oracle=False):
        print(f"# {method_label(method)}  (n = {data.n}, p = {data.p})")
        if isinstance(method, SelectorSpec):
            sel = fit_selector(method, data)
            print("rank  posterior  size  variables")
            for i, sc in enumerate(sel.top(args.top), start=1):
                names = ",".join(data.names[j] for j in sc.gamma.indices) or "(none)"
                print(f"{i:4d}  {sc.posterior_prob:9.6f}  {sc.gamma.p_gamma:4d}  {names}")
            chosen = sel.map
            if sel.degenerate:
                print(f"skipped {len(sel.degenerate)} degenerate model(s)")
        else:
            folds = kfold_folds(data.n, 10, np.random.default_rng(_seed(args))) \
                if data.n > 30 else None
            res = tune(data, method, folds=folds)
            print(f"lambda = {res.lam:.6g}, mu = {res.mu:.6g}")
            chosen = res.fit.support
        names = ",".join(data.names[j] for j in chosen.indices) or "(none)"
        print(f"selected: {names}")
    return 0


def cmd_predict(args) -> int:
    data = _load(args)
    new = load_csv_predictors(args.new, data.names)
    methods = expand_methods(args.method, with_oracle=False)
    if len(methods) != 1:
        raise UsageError("predict takes exactly one method")
    method = methods[0]
    if isinstance(method, SelectorSpec):
        yhat = fit_selector(method, data).predict(new)
    else:
        yhat = tune(data, method).fit.predict(new)
    for v in yhat:
        print(repr(float(v)))
    return 0


def load_csv_predictors(path, names) -> np.ndarray:
    """Predictor block of a CSV that has no response column."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = [h.strip() for h in next(reader)]
        missing = [c for c in names if c not in header]
        if missing:
            raise GpselError(f"{path}: missing predictor column(s) {missing}")
        idx = [header.index(c) for c in names]
        rows = [[float(rec[j]) for j in idx] for rec in reader if rec]
    return np.array(rows, dtype=float).reshape(len(rows), len(names))


def cmd_bench(args) -> int:
    cfg = load_config(args.config) if args.config else None
    seed = _seed(args, cfg.seed if cfg else 0)
    reps = args.reps or (cfg.reps if cfg else 100)
    n = args.n or (cfg.n if cfg else 15)
    n_test = args.n_test or (cfg.n_test if cfg else 200)
    fmt = args.format or (cfg.format if cfg else "both")
    _positive(reps, "reps")
    if args.methods:
        methods = expand_methods(args.methods)
    elif cfg and cfg.methods:
        methods = cfg.methods
    else:
        methods = expand_methods("all")
    if args.example:
        ids = list(EXAMPLES) if args.example == "all" else [int(s) for s in args.example.split(",")]
    elif cfg and cfg.example:
        ids = [cfg.example]
    else:
        raise UsageError("bench needs --example (or a config with 'example')")
    if any(i not in EXAMPLES for i in ids):
        raise UsageError(f"examples must be in 1..6, got {ids}")
    out = _out(args, cfg.out if cfg else "results")
    jobs = _jobs(args)
    for i in ids:
        report, records = run_replicates(EXAMPLES[i], methods, reps, seed, n, n_test, jobs,
                                         return_records=True)
        for path in write_report(report, out / f"example{i}", fmt):
            print(path)
        raw = out / f"example{i}_replicates.csv"
        raw.write_text(records_to_csv(records))
        print(raw)
    return 0


def cmd_probe_shift(args) -> int:
    cfg = load_config(args.config) if args.config else None
    seed = _seed(args, cfg.seed if cfg else 0)
    reps = args.reps or (cfg.reps if cfg else 100)
    _positive(reps, "reps")
    if args.k:
        ks = [int(s) for s in args.k.split(",") if s.strip()]
    else:
        ks = list(cfg.k_values) if cfg else [1, 2, 3]
    if args.methods:
        methods = expand_methods(args.methods, with_oracle=False)
    elif cfg and cfg.methods:
        methods = [m for m in cfg.methods if m != ORACLE]
    else:
        methods = expand_methods("NIMS", with_oracle=False)
    out = _out(args, cfg.out if cfg else "results")
    fmt = args.format or (cfg.format if cfg else "both")
    reports = shift_probe(None, ks, reps, seed, methods, _jobs(args))
    for k, report in reports.items():
        for path in write_report(report, out / f"shift_k{k}", fmt):
            print(path)
        for row in report.rows:
            msg = f"k={k} {row.method}: MSE {row.mse:.4g}, HITS {row.hits:.4g}, FP {row.fp:.4g}"
            if row.nsel == 0:
                msg += f"; null model selected in {reps}/{reps} replicates"
            print(msg)
    return 0


def cmd_realdata(args) -> int:
    cfg = load_config(args.config) if args.config else None
    path = args.data or (cfg.data if cfg else None)
    response = args.response or (cfg.response if cfg else None)
    if not path or not response:
        raise UsageError("realdata needs --data and --response (or a config with both)")
    preds = args.predictors.split(",") if args.predictors else None
    data = load_csv(path, response, preds)
    n_train = args.n_train or (cfg.n_train if cfg else None)
    if n_train is None:
        raise UsageError("realdata needs --n-train")
    n_test = args.n_test or data.n - n_train  # default: every remaining row
    seed = _seed(args, cfg.seed if cfg else 0)
    splits = args.reps or (cfg.splits if cfg else 25)
    _positive(splits, "reps")
    folds = args.folds if args.folds is not None else (cfg.folds if cfg else 10)
    if folds == 1 or folds < 0:
        raise UsageError("--folds must be 0 or >= 2")
    if args.methods:
        methods = expand_methods(args.methods, with_oracle=False)
    elif cfg and cfg.methods:
        methods = [m for m in cfg.methods if m != ORACLE]
    else:
        methods = expand_methods("all", with_oracle=False)
    report, records = real_data_protocol(data, n_train, n_test, splits, methods, seed,
                                         folds or None, _jobs(args), return_records=True)
    out = _out(args, cfg.out if cfg else "results")
    fmt = args.format or (cfg.format if cfg else "both")
    for p in write_report(report, out / f"{data.name}_report", fmt):
        print(p)
    raw = out / f"{data.name}_splits.csv"
    raw.write_text(records_to_csv(records))
    print(raw)
    return 0


COMMANDS = {
    "simulate": cmd_simulate,
    "select": cmd_select,
    "predict": cmd_predict,
    "bench": cmd_bench,
    "probe-shift": cmd_probe_shift,
    "realdata": cmd_realdata,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"gpsel {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except (GpselError, OSError, ValueError) as exc:
        print(f"gpsel {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
