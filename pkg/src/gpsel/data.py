"""Datasets, CSV ingest, experiment configuration and report persistence."""

from __future__ import annotations

import csv
import logging
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigError, EmptyAfterFiltering, ParseError, ShapeMismatch
from .linalg import DesignMatrix
from .methods import expand_methods
from .report import BenchmarkReport, from_csv, to_csv, to_markdown

log = logging.getLogger(__name__)

MISSING_TOKENS = frozenset({"", "na", "nan", "?", "."})


@dataclass(frozen=True)
class Dataset:
    """Response plus named predictors; immutable once built."""

    name: str
    y: np.ndarray
    design: DesignMatrix
    provenance: str = ""
    dropped_rows: tuple[int, ...] = ()

    def __post_init__(self):
        y = np.asarray(self.y, dtype=float).ravel()
        design = self.design
        if not isinstance(design, DesignMatrix):
            design = DesignMatrix(design)
        if y.shape[0] != design.n:
            raise ShapeMismatch(f"y has {y.shape[0]} rows, X has {design.n}")
        y.setflags(write=False)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "design", design)

    @classmethod
    def from_arrays(cls, X, y, names=(), name: str = "data", provenance: str = "") -> "Dataset":
        return cls(name, y, DesignMatrix(X, tuple(names)), provenance)

    @property
    def X(self) -> np.ndarray:
        return self.design.values

    @property
    def names(self) -> tuple[str, ...]:
        return self.design.names

    @property
    def n(self) -> int:
        return self.design.n

    @property
    def p(self) -> int:
        return self.design.p

    def subset(self, rows, name: str | None = None) -> "Dataset":
        rows = np.asarray(rows)
        return Dataset(name or self.name, self.y[rows],
                       DesignMatrix(self.X[rows], self.names), self.provenance)


def _parse_cell(text: str):
    t = text.strip()
    if t.lower() in MISSING_TOKENS:
        return None
    try:
        v = float(t)
    except ValueError:
        return None
    return v if math.isfinite(v) else None


def load_csv(path, response_column: str, predictor_columns=None, name: str | None = None) -> Dataset:
    """Read a headed CSV, dropping every row with a missing or non-numeric cell.

    Only the response and predictor columns are inspected, so junk in an
    unused column does not cost a row. Predictors default to every other
    column, in file order.

    Raises
    ------
    FileNotFoundError
        If ``path`` does not exist.
    ParseError
        If a named column is absent or a row has the wrong number of fields.
    EmptyAfterFiltering
        If no complete row remains.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError(0, None, "file is empty") from None
        if response_column not in header:
            raise ParseError(0, response_column, "response column not found in header")
        if predictor_columns is None:
            predictor_columns = [h for h in header if h != response_column]
        for col in predictor_columns:
            if col not in header:
                raise ParseError(0, col, "predictor column not found in header")
        cols = [header.index(response_column)] + [header.index(c) for c in predictor_columns]
        rows, dropped = [], []
        for i, rec in enumerate(reader, start=1):
            if not rec or all(not c.strip() for c in rec):
                continue
            if len(rec) != len(header):
                raise ParseError(i, None, f"expected {len(header)} fields, found {len(rec)}")
            vals = [_parse_cell(rec[j]) for j in cols]
            if any(v is None for v in vals):
                dropped.append(i)
                continue
            rows.append(vals)
    if dropped:
        log.warning("%s: dropped %d incomplete rows: %s", path.name, len(dropped), dropped)
    if not rows:
        raise EmptyAfterFiltering(f"{path}: no complete rows")
    arr = np.array(rows, dtype=float)
    return Dataset(name or path.stem, arr[:, 0],
                   DesignMatrix(arr[:, 1:], tuple(predictor_columns)),
                   provenance=str(path), dropped_rows=tuple(dropped))


def write_csv(dataset: Dataset, path, response_name: str = "y") -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([response_name, *dataset.names])
        for yi, row in zip(dataset.y, dataset.X):
            w.writerow([repr(float(yi)), *(repr(float(v)) for v in row)])


# ---------------------------------------------------------------------------
# configuration


@dataclass
class ExperimentConfig:
    methods: list = field(default_factory=list)
    example: int | None = None
    data: str | None = None
    response: str | None = None
    reps: int = 100
    splits: int = 25
    n: int = 15
    n_test: int = 200
    n_train: int | None = None
    seed: int = 0
    out: str = "results"
    format: str = "both"
    k_values: tuple[int, ...] = (1, 2, 3)
    folds: int = 10


_INT_KEYS = {"example", "reps", "splits", "n", "n_test", "n_train", "seed", "folds"}
_STR_KEYS = {"data", "response", "out", "format"}
_LIST_KEYS = {"methods", "k_values"}


def parse_config_text(text: str) -> dict:
    """Raw ``key = value`` pairs; ``#`` starts a comment."""
    raw, errors = {}, []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            errors.append(f"line {lineno}: expected 'key = value'")
            continue
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key in raw:
            errors.append(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value
    if errors:
        raise ConfigError(errors)
    return raw


def build_config(raw: dict, env=None) -> ExperimentConfig:
    """Validate raw pairs into an :class:`ExperimentConfig`.

    Every problem is collected before raising, so one :class:`ConfigError`
    lists them all. ``GPSEL_SEED`` in ``env`` overrides the seed.
    """
    env = os.environ if env is None else env
    cfg = ExperimentConfig()
    errors = []
    known = _INT_KEYS | _STR_KEYS | _LIST_KEYS
    for key in raw:
        if key not in known:
            errors.append(f"unknown key {key!r}")
    for key in _INT_KEYS & raw.keys():
        try:
            setattr(cfg, key, int(raw[key]))
        except ValueError:
            errors.append(f"{key}: expected an integer, got {raw[key]!r}")
    for key in _STR_KEYS & raw.keys():
        setattr(cfg, key, raw[key])
    if "methods" in raw:
        names = [s.strip() for s in raw["methods"].split(",") if s.strip()]
        bad = []
        for name in names:
            try:
                expand_methods([name])
            except ValueError:
                bad.append(name)
        if bad:
            errors.append(f"methods: unsupported method(s) {', '.join(bad)}")
        elif not names:
            errors.append("methods: empty list")
        else:
            cfg.methods = expand_methods(names)
    if "k_values" in raw:
        try:
            cfg.k_values = tuple(int(s) for s in raw["k_values"].split(",") if s.strip())
        except ValueError:
            errors.append(f"k_values: cannot parse {raw['k_values']!r}")
    if "GPSEL_SEED" in env:
        try:
            cfg.seed = int(env["GPSEL_SEED"])
        except ValueError:
            errors.append(f"GPSEL_SEED: expected an integer, got {env['GPSEL_SEED']!r}")

    if cfg.reps < 1:
        errors.append(f"reps must be >= 1, got {cfg.reps}")
    if cfg.splits < 1:
        errors.append(f"splits must be >= 1, got {cfg.splits}")
    if cfg.example is not None and not 1 <= cfg.example <= 6:
        errors.append(f"example must be in 1..6, got {cfg.example}")
    if cfg.data is not None and cfg.response is None:
        errors.append("'data' needs 'response'")
    if cfg.n < 2 or cfg.n_test < 1:
        errors.append("n must be >= 2 and n_test >= 1")
    if cfg.seed < 0:
        errors.append(f"seed must be non-negative, got {cfg.seed}")
    if cfg.format not in ("csv", "md", "both"):
        errors.append(f"format must be csv, md or both, got {cfg.format!r}")
    if cfg.folds < 0 or cfg.folds == 1:
        errors.append(f"folds must be 0 (leave-one-out) or >= 2, got {cfg.folds}")
    if errors:
        raise ConfigError(errors)
    return cfg


def load_config(path, env=None) -> ExperimentConfig:
    return build_config(parse_config_text(Path(path).read_text()), env)


# ---------------------------------------------------------------------------
# reports


def write_report(report: BenchmarkReport, path, fmt: str = "both") -> list[Path]:
    """Write ``<path>.csv`` and/or ``<path>.md``; returns the files written."""
    base = Path(path)
    if base.suffix in (".csv", ".md"):
        base = base.with_suffix("")
    base.parent.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt in ("csv", "both"):
        target = base.with_suffix(".csv")
        target.write_text(to_csv(report))
        written.append(target)
    if fmt in ("md", "both"):
        target = base.with_suffix(".md")
        target.write_text(to_markdown(report))
        written.append(target)
    return written


def read_report_csv(path, title: str = "") -> BenchmarkReport:
    return from_csv(Path(path).read_text(), title=title)
