"""Aggregated benchmark results and their CSV / markdown renderings."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field


@dataclass(frozen=True)
class MethodRow:
    """Monte Carlo means and standard errors for one method.

    ``None`` marks a column that does not apply (HITS without a true
    support, any SE from a single replicate).
    """

    method: str
    mse: float
    mse_se: float | None
    hits: float | None
    hits_se: float | None
    fp: float | None
    fp_se: float | None
    frequencies: tuple[float, ...]
    nsel: float
    nsel_se: float | None
    failures: int = 0


@dataclass
class BenchmarkReport:
    title: str
    p: int
    reps: int
    seed: int
    rows: list[MethodRow] = field(default_factory=list)
    variable_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.variable_names:
            self.variable_names = tuple(f"v{j + 1}" for j in range(self.p))

    def row(self, method: str) -> MethodRow:
        for r in self.rows:
            if r.method == method:
                return r
        raise KeyError(method)

    @property
    def methods(self) -> list[str]:
        return [r.method for r in self.rows]

    @property
    def has_hits(self) -> bool:
        return any(r.hits is not None for r in self.rows)

    @property
    def has_fp(self) -> bool:
        return any(r.fp is not None for r in self.rows)


def csv_header(p: int) -> list[str]:
    return (["method", "mse", "mse_se", "hits", "hits_se", "fp", "fp_se"]
            + [f"v{j + 1}" for j in range(p)] + ["nsel", "nsel_se"])


def _cell(v) -> str:
    return "" if v is None else repr(float(v))


def to_csv(report: BenchmarkReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(csv_header(report.p))
    for r in report.rows:
        w.writerow([r.method, _cell(r.mse), _cell(r.mse_se), _cell(r.hits), _cell(r.hits_se),
                    _cell(r.fp), _cell(r.fp_se), *(_cell(f) for f in r.frequencies),
                    _cell(r.nsel), _cell(r.nsel_se)])
    return buf.getvalue()


def _num(s: str):
    return None if s == "" else float(s)


def from_csv(text: str, title: str = "", reps: int = 0, seed: int = 0) -> BenchmarkReport:
    rows = list(csv.reader(io.StringIO(text)))
    header = rows[0]
    p = sum(1 for h in header if h.startswith("v") and h[1:].isdigit())
    out = BenchmarkReport(title, p, reps, seed)
    for rec in rows[1:]:
        if not rec:
            continue
        vals = [_num(s) for s in rec[1:]]
        out.rows.append(MethodRow(rec[0], vals[0], vals[1], vals[2], vals[3], vals[4], vals[5],
                                  tuple(vals[6:6 + p]), vals[6 + p], vals[7 + p]))
    return out


def _sig(v) -> str:
    return "" if v is None else f"{v:.6g}"


def _with_se(v, se) -> str:
    if v is None:
        return "-"
    return _sig(v) if se is None else f"{_sig(v)} ({_sig(se)})"


def to_markdown(report: BenchmarkReport) -> str:
    """Two tables: means with standard errors, then selection frequencies."""
    cols = ["Method", "MSE"]
    if report.has_hits:
        cols.append("HITS")
    if report.has_fp:
        cols.append("FP")
    cols.append("Selected")
    lines = [f"## {report.title}", "", f"Replicates: {report.reps}, seed: {report.seed}", ""]
    lines.append("| " + " | ".join(cols) + " |")
    lines.append("|" + "---|" * len(cols))
    for r in report.rows:
        cells = [r.method, _with_se(r.mse, r.mse_se)]
        if report.has_hits:
            cells.append(_with_se(r.hits, r.hits_se))
        if report.has_fp:
            cells.append(_with_se(r.fp, r.fp_se))
        cells.append(_with_se(r.nsel, r.nsel_se))
        lines.append("| " + " | ".join(cells) + " |")
    lines += ["", "Relative frequencies of the selected variables", ""]
    names = list(report.variable_names)
    lines.append("| Method | " + " | ".join(names) + " |")
    lines.append("|" + "---|" * (len(names) + 1))
    for r in report.rows:
        lines.append("| " + " | ".join([r.method] + [f"{f:.2f}" for f in r.frequencies]) + " |")
    return "\n".join(lines) + "\n"
