"""Simulation and real-data benchmarks: generators, replicate runner, reports.

Every replicate draws its data from a Philox stream keyed by
``(seed, example id, replicate)``, so all methods see the same draws and a
replicate's result does not depend on which worker ran it.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bayes import NIMS, SelectorSpec, fit_selector
from .data import Dataset
from .errors import GpselError, ReplicateFailure
from .linalg import qr_least_squares
from .methods import ORACLE, expand_methods, method_label, parse_method
from .models import ModelIndicator, all_model_stats
from .regularizers import kfold_folds, tune
from .report import BenchmarkReport, MethodRow

MAX_FAILURE_RATE = 0.05
_REAL_DATA_STREAM = 0xDA7A


@dataclass(frozen=True)
class SimExample:
    id: int
    p: int
    beta: tuple[float, ...]  # intercept first
    noise_sd: float
    design_kind: str  # IID, FACTOR_GROUPS or AR
    rho: float = 0.0
    title: str = ""

    @property
    def truth(self) -> ModelIndicator:
        return ModelIndicator.from_mask(np.array(self.beta[1:]) != 0)

    @property
    def truth_support(self) -> frozenset[int]:
        return frozenset(self.truth.indices)


def _beta(p, intercept=0.0, **coefs):
    b = [intercept] + [0.0] * p
    for name, v in coefs.items():
        b[int(name[1:])] = v
    return tuple(b)


EXAMPLES = {
    1: SimExample(1, 10, _beta(10, 2.0, x2=1.0, x3=2.0, x6=-2.0, x7=-1.5), 1.0, "IID",
                  title="sparse uncorrelated design"),
    2: SimExample(2, 10, _beta(10, 2.0, x2=1.0, x3=2.0, x6=-2.0, x7=-1.5), 1.0, "FACTOR_GROUPS",
                  title="sparse correlated design"),
    3: SimExample(3, 8, _beta(8, x1=3.0, x2=1.5, x5=2.0), 3.0, "AR", 0.5,
                  title="sparse noisy correlated design"),
    4: SimExample(4, 8, (0.0,) + (0.85,) * 8, 1.0, "AR", 0.5,
                  title="saturated correlated design"),
    5: SimExample(5, 9, _beta(9, x2=2.0, x4=-3.0), 1.0, "AR", 0.7,
                  title="sparse correlated design, rho = 0.7"),
    6: SimExample(6, 8, _beta(8, 2.0), 2.0, "AR", 0.5, title="null model"),
}

# factor groups of the correlated design: (first, last) 1-based, shared factor index
_GROUPS = ((1, 2, 11), (3, 5, 12), (6, 10, 13))


def replicate_rng(seed: int, stream: int, rep: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream, rep])))


def draw_design(ex: SimExample, m: int, rng: np.random.Generator) -> np.ndarray:
    if ex.design_kind == "IID":
        return rng.standard_normal((m, ex.p))
    if ex.design_kind == "FACTOR_GROUPS":
        z = rng.standard_normal((m, 13))
        X = np.empty((m, ex.p))
        for lo, hi, f in _GROUPS:
            for i in range(lo, hi + 1):
                X[:, i - 1] = (z[:, i - 1] + 3.0 * z[:, f - 1]) / math.sqrt(10.0)
        return X
    if ex.design_kind == "AR":
        idx = np.arange(ex.p)
        cov = ex.rho ** np.abs(idx[:, None] - idx[None, :])
        L = np.linalg.cholesky(cov)
        return rng.standard_normal((m, ex.p)) @ L.T
    raise ValueError(f"unknown design kind {ex.design_kind!r}")


def generate_example(ex: SimExample, n: int = 15, n_test: int = 200, seed: int = 0,
                     rep: int = 0) -> tuple[Dataset, Dataset]:
    """Training and test draws for one replicate; deterministic in ``(seed, rep)``."""
    rng = replicate_rng(seed, ex.id, rep)
    beta = np.array(ex.beta)
    X = draw_design(ex, n + n_test, rng)
    y = beta[0] + X @ beta[1:] + ex.noise_sd * rng.standard_normal(n + n_test)
    names = tuple(f"x{j + 1}" for j in range(ex.p))
    prov = f"example {ex.id}, seed {seed}, replicate {rep}"
    train = Dataset.from_arrays(X[:n], y[:n], names, f"example{ex.id}-train", prov)
    test = Dataset.from_arrays(X[n:], y[n:], names, f"example{ex.id}-test", prov)
    return train, test


def regression_ss(data) -> float:
    """``y'P y - n ybar^2`` for the full model with intercept."""
    X = np.asarray(data.X)
    y = np.asarray(data.y)
    fit = qr_least_squares(np.column_stack([np.ones(len(y)), X]), y)
    dev = y - y.mean()
    return float(dev @ dev) - fit.rss


def shift_datasets(train: Dataset, test: Dataset, k: int) -> tuple[Dataset, Dataset]:
    """Add ``10^k`` times the training regression sum of squares to every response."""
    c = 10.0 ** k * regression_ss(train)
    return (Dataset(train.name, train.y + c, train.design, train.provenance + f", shift 1e{k}"),
            Dataset(test.name, test.y + c, test.design, test.provenance + f", shift 1e{k}"))


# ---------------------------------------------------------------------------
# one replicate


@dataclass(frozen=True)
class ReplicateRecord:
    rep: int
    method: str
    mse: float
    support: ModelIndicator | None
    error: str = ""

    @property
    def failed(self) -> bool:
        return bool(self.error)


def rmse(y, yhat) -> float:
    r = np.asarray(y) - np.asarray(yhat)
    return float(math.sqrt(np.mean(r * r)))


def oracle_predict(train, test, truth: ModelIndicator) -> np.ndarray:
    X = np.column_stack([np.ones(train.n), train.X[:, truth.mask]])
    coef = qr_least_squares(X, train.y).coefficients
    return coef[0] + test.X[:, truth.mask] @ coef[1:]


def evaluate_methods(train, test, methods, rep: int, truth: ModelIndicator | None = None,
                     folds=None) -> list[ReplicateRecord]:
    """Fit every method on ``train`` and score it on ``test``.

    Bayesian selectors share one pass of per-model least-squares fits.
    Failures are recorded, not raised.
    """
    out = []
    pre = None
    for method in methods:
        label = method_label(method)
        try:
            if isinstance(method, SelectorSpec):
                if pre is None:
                    models, stats, _ = all_model_stats(train)
                    pre = (models, stats)
                sel = fit_selector(method, train, pre)
                out.append(ReplicateRecord(rep, label, rmse(test.y, sel.predict(test.X)), sel.map))
            elif method == ORACLE:
                if truth is None:
                    continue
                out.append(ReplicateRecord(rep, label, rmse(test.y, oracle_predict(train, test, truth)),
                                           truth))
            else:
                res = tune(train, method, folds=folds)
                out.append(ReplicateRecord(rep, label, rmse(test.y, res.fit.predict(test.X)),
                                           res.fit.support))
        except (GpselError, np.linalg.LinAlgError) as exc:
            out.append(ReplicateRecord(rep, label, float("nan"), None, f"{type(exc).__name__}: {exc}"))
    return out


def _sim_task(args):
    ex, methods, rep, seed, n, n_test, shift_k = args
    train, test = generate_example(ex, n, n_test, seed, rep)
    if shift_k is not None:
        train, test = shift_datasets(train, test, shift_k)
    return evaluate_methods(train, test, methods, rep, ex.truth)


def _map_tasks(fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


# ---------------------------------------------------------------------------
# aggregation


def _mean_se(values):
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        return float("nan"), None
    se = float(v.std(ddof=1) / math.sqrt(v.size)) if v.size > 1 else None
    return float(v.mean()), se


def aggregate(records, methods, p: int, truth: ModelIndicator | None, title: str, reps: int,
              seed: int, names=()) -> BenchmarkReport:
    """Fold per-replicate records into a report.

    Records are sorted by replicate first, so the result is the same whatever
    order the workers returned them in.

    Raises
    ------
    ReplicateFailure
        If more than 5% of a method's replicates failed.
    """
    records = sorted(records, key=lambda r: (r.rep, r.method))
    report = BenchmarkReport(title, p, reps, seed, variable_names=tuple(names))
    has_truth = truth is not None and truth.p_gamma > 0
    for method in methods:
        label = method_label(method)
        rows = [r for r in records if r.method == label]
        if not rows:
            continue
        ok = [r for r in rows if not r.failed]
        failures = len(rows) - len(ok)
        if failures > MAX_FAILURE_RATE * len(rows):
            raise ReplicateFailure(f"{label}: {failures} of {len(rows)} replicates failed; "
                                   f"first error: {next(r.error for r in rows if r.failed)}")
        masks = np.array([r.support.mask for r in ok], dtype=float).reshape(len(ok), p)
        mse, mse_se = _mean_se([r.mse for r in ok])
        nsel, nsel_se = _mean_se(masks.sum(axis=1))
        hits = hits_se = fp = fp_se = None
        if truth is not None:
            t = truth.mask
            fp, fp_se = _mean_se(masks[:, ~t].sum(axis=1))
            if has_truth:
                hits, hits_se = _mean_se(masks[:, t].sum(axis=1))
        freqs = tuple(float(f) for f in masks.mean(axis=0))
        report.rows.append(MethodRow(label, mse, mse_se, hits, hits_se, fp, fp_se, freqs,
                                     nsel, nsel_se, failures))
    return report


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rep", "method", "mse", "support", "error"])
    for r in sorted(records, key=lambda r: (r.rep, r.method)):
        w.writerow([r.rep, r.method, repr(r.mse), "" if r.support is None else str(r.support), r.error])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# protocols


def default_methods(with_oracle: bool = True) -> list:
    return expand_methods(["all"], with_oracle=with_oracle)


def _parse_all(methods) -> list:
    # labels such as "HG-2" are accepted alongside SelectorSpec objects
    return [parse_method(m) if isinstance(m, str) else m for m in methods]


def run_replicates(ex: SimExample, methods=None, reps: int = 100, seed: int = 0, n: int = 15,
                   n_test: int = 200, jobs: int = 1, shift_k: int | None = None,
                   return_records: bool = False):
    """Replicated train/test comparison on a simulated example.

    Returns a :class:`BenchmarkReport`, plus the raw records when
    ``return_records`` is set.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    methods = default_methods() if methods is None else _parse_all(methods)
    tasks = [(ex, methods, rep, seed, n, n_test, shift_k) for rep in range(reps)]
    records = [r for chunk in _map_tasks(_sim_task, tasks, jobs) for r in chunk]
    title = f"Example {ex.id}: {ex.title}" if shift_k is None else \
        f"Example {ex.id}, response shifted by 10^{shift_k} x regression SS"
    report = aggregate(records, methods, ex.p, ex.truth, title, reps, seed)
    return (report, records) if return_records else report


def shift_probe(ex: SimExample | None = None, k_values=(1, 2, 3), reps: int = 100, seed: int = 0,
                methods=(NIMS,), jobs: int = 1) -> dict[int, BenchmarkReport]:
    """Location-shift probe: rerun the benchmark with shifted responses, per ``k``."""
    ex = EXAMPLES[1] if ex is None else ex
    return {k: run_replicates(ex, methods, reps, seed, jobs=jobs, shift_k=k) for k in k_values}


def _split_task(args):
    data, n_train, n_test, split, methods, seed, folds = args
    rng = replicate_rng(seed, _REAL_DATA_STREAM, split)
    perm = rng.permutation(data.n)
    train = data.subset(np.sort(perm[:n_train]), f"{data.name}-train")
    test = data.subset(np.sort(perm[n_train:n_train + n_test]), f"{data.name}-test")
    cv = kfold_folds(n_train, folds, rng) if folds else None
    return evaluate_methods(train, test, methods, split, None, folds=cv)


def real_data_protocol(data: Dataset, n_train: int, n_test: int, splits: int = 25, methods=None,
                       seed: int = 0, folds: int | None = 10, jobs: int = 1,
                       return_records: bool = False):
    """Repeated random train/test splits of a real dataset.

    Regularizers are tuned by ``folds``-fold cross-validation (leave-one-out
    when ``folds`` is None).
    """
    if n_train + n_test > data.n:
        raise ValueError(f"n_train + n_test = {n_train + n_test} exceeds {data.n} rows")
    methods = default_methods(with_oracle=False) if methods is None else \
        [m for m in _parse_all(methods) if m != ORACLE]
    tasks = [(data, n_train, n_test, s, methods, seed, folds) for s in range(splits)]
    records = [r for chunk in _map_tasks(_split_task, tasks, jobs) for r in chunk]
    report = aggregate(records, methods, data.p, None, f"{data.name}: {splits} random splits",
                       splits, seed, data.names)
    return (report, records) if return_records else report
