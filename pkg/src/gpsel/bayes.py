"""Bayesian selectors built on Zellner g-priors.

Every selector maps per-model statistics to an unnormalised log posterior
weight (uniform prior over the admissible models), a posterior probability
and a shrinkage factor ``E[g/(1+g) | y, gamma]`` used for model-averaged
prediction.

Roster
------
NIMS        Jeffreys hyperprior on (sigma^2, g) for the non-centred model.
HG-a        hyper-g prior ``(1+g)^(-a/2)``, centred model; HG-2 drops the null.
BRIC / G=g  fixed g (BRIC uses ``g = max(n, p^2)``).
ZS-N, ZS-F  Zellner-Siow Cauchy prior, Bayes factors against null / full.
EB-L, EB-G  empirical Bayes g, per model / shared.
AIC, BIC    penalised likelihood, reported as ``-criterion/2``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq, minimize_scalar
from scipy.special import logsumexp

from .errors import (
    AllDegenerate,
    DegenerateModel,
    DomainError,
    IntegrabilityError,
    NullModelNotAllowed,
    OptimizationFailure,
    QuadratureFailure,
    ShapeMismatch,
    ZeroResidual,
)
from .models import ModelIndicator, ModelStats, all_model_stats, enumerate_models
from .special import log_hyp2f1

EB_G_MAX = 1e8


class Kind(enum.Enum):
    AIC = "AIC"
    BIC = "BIC"
    FIXED_G = "FIXED_G"
    NIMS = "NIMS"
    HYPER_G = "HYPER_G"
    ZS_NULL = "ZS_NULL"
    ZS_FULL = "ZS_FULL"
    EB_LOCAL = "EB_LOCAL"
    EB_GLOBAL = "EB_GLOBAL"


class Convention(enum.Enum):
    M_GAMMA = "M_GAMMA"  # intercept inside the g-prior
    M_INV = "M_INV"  # flat prior on the intercept, centred fit


@dataclass(frozen=True)
class SelectorSpec:
    kind: Kind
    g: float | None = None
    a: float | None = None
    bric: bool = False

    def __post_init__(self):
        if self.kind is Kind.FIXED_G and not self.bric:
            if self.g is None or not self.g > 0:
                raise ValueError("FIXED_G needs g > 0")
        if self.kind is Kind.HYPER_G and (self.a is None or self.a < 2):
            raise ValueError("HYPER_G needs a >= 2")

    @property
    def convention(self) -> Convention:
        return Convention.M_GAMMA if self.kind is Kind.NIMS else Convention.M_INV

    @property
    def include_null(self) -> bool:
        return not (self.kind is Kind.HYPER_G and self.a == 2)

    @property
    def is_criterion(self) -> bool:
        return self.kind in (Kind.AIC, Kind.BIC)

    @property
    def label(self) -> str:
        if self.kind is Kind.HYPER_G:
            return f"HG-{self.a:g}"
        if self.kind is Kind.FIXED_G:
            return "BRIC" if self.bric else f"G={self.g:g}"
        return {
            Kind.ZS_NULL: "ZS-N", Kind.ZS_FULL: "ZS-F",
            Kind.EB_LOCAL: "EB-L", Kind.EB_GLOBAL: "EB-G",
        }.get(self.kind, self.kind.value)

    def resolve_g(self, n: int, p: int) -> float:
        return float(max(n, p * p)) if self.bric else float(self.g)


NIMS = SelectorSpec(Kind.NIMS)
HG2 = SelectorSpec(Kind.HYPER_G, a=2.0)
HG3 = SelectorSpec(Kind.HYPER_G, a=3.0)
HG4 = SelectorSpec(Kind.HYPER_G, a=4.0)
BRIC = SelectorSpec(Kind.FIXED_G, bric=True)
ZS_N = SelectorSpec(Kind.ZS_NULL)
ZS_F = SelectorSpec(Kind.ZS_FULL)
EB_L = SelectorSpec(Kind.EB_LOCAL)
EB_G = SelectorSpec(Kind.EB_GLOBAL)
AIC = SelectorSpec(Kind.AIC)
BIC = SelectorSpec(Kind.BIC)

# display order used by the report tables
ALL_SELECTORS = (AIC, BIC, BRIC, EB_L, EB_G, ZS_N, ZS_F, HG3, HG4, HG2, NIMS)

_ALIASES = {
    "NIMS": NIMS, "BRIC": BRIC, "AIC": AIC, "BIC": BIC,
    "ZSN": ZS_N, "ZSF": ZS_F, "EBL": EB_L, "EBG": EB_G,
}


def parse_selector(name: str) -> SelectorSpec:
    """Parse a method name such as ``NIMS``, ``HG-3``, ``ZS-N`` or ``G=100``."""
    key = name.strip().upper()
    m = re.fullmatch(r"G\s*=\s*([0-9.eE+-]+)", key)
    if m:
        return SelectorSpec(Kind.FIXED_G, g=float(m.group(1)))
    key = key.replace("-", "").replace("_", "")
    m = re.fullmatch(r"HG([0-9.]+)", key)
    if m:
        return SelectorSpec(Kind.HYPER_G, a=float(m.group(1)))
    if key in _ALIASES:
        return _ALIASES[key]
    raise ValueError(f"unsupported Bayesian method {name!r}")


@dataclass(frozen=True)
class ModelScore:
    gamma: ModelIndicator
    log_marginal: float
    posterior_prob: float
    shrinkage: float | None = None


# ---------------------------------------------------------------------------
# per-model scores


def _check_nims(stats: ModelStats, n: int):
    if stats.saturated_uncentered:
        raise DegenerateModel("y lies in the span of the model (y'Py = y'y)")
    if n <= stats.p_gamma + 3:
        raise IntegrabilityError(f"NIMS needs n > p_gamma + 3 (n={n}, p_gamma={stats.p_gamma})")


def score_nims(stats: ModelStats, n: int) -> float:
    """log 2F1(n/2, 1; (p+3)/2; y'Py/y'y) - log(p + 1)."""
    _check_nims(stats, n)
    p = stats.p_gamma
    lf = log_hyp2f1(n / 2.0, 1.0, (p + 3) / 2.0, stats.r2_uncentered, xc=stats.resid_uncentered)
    return lf - math.log(p + 1.0)


def shrinkage_nims(stats: ModelStats, n: int) -> float:
    _check_nims(stats, n)
    p = stats.p_gamma
    x, xc = stats.r2_uncentered, stats.resid_uncentered
    num = log_hyp2f1(n / 2.0, 2.0, (p + 3) / 2.0 + 1.0, x, xc=xc)
    den = log_hyp2f1(n / 2.0, 1.0, (p + 3) / 2.0, x, xc=xc)
    return math.exp(math.log(2.0 / (p + 3.0)) + num - den)


def _check_hyper_g(stats: ModelStats, n: int, a: float):
    p = stats.p_gamma
    if a < 2:
        raise DomainError(f"hyper-g needs a >= 2, got {a}")
    if a == 2 and p == 0:
        raise NullModelNotAllowed("HG-2 is defined on non-null models only")
    if stats.saturated_centered:
        raise DegenerateModel("centred fit is exact (R^2 = 1)")
    if a > 2 and n - 1 <= p + a - 2:
        raise IntegrabilityError(f"hyper-g needs n - 1 > p + a - 2 (n={n}, p={p}, a={a})")


def score_hyper_g(stats: ModelStats, n: int, a: float) -> float:
    """Log Bayes factor of ``gamma`` under the hyper-g prior, centred model.

    ``a == 2`` uses ``log 2F1((n-1)/2, 1; (p+2)/2; R^2) - log p``; ``a > 2``
    uses ``log((a-2)/(p+a-2)) + log 2F1((n-1)/2, 1; (p+a)/2; R^2)``.
    """
    _check_hyper_g(stats, n, a)
    p = stats.p_gamma
    lf = log_hyp2f1((n - 1) / 2.0, 1.0, (p + a) / 2.0, stats.r2_centered, xc=stats.resid_centered)
    if a == 2:
        return lf - math.log(p)
    return math.log((a - 2.0) / (p + a - 2.0)) + lf


def shrinkage_hyper_g(stats: ModelStats, n: int, a: float) -> float:
    _check_hyper_g(stats, n, a)
    p = stats.p_gamma
    x, xc = stats.r2_centered, stats.resid_centered
    num = log_hyp2f1((n - 1) / 2.0, 2.0, (p + a) / 2.0 + 1.0, x, xc=xc)
    den = log_hyp2f1((n - 1) / 2.0, 1.0, (p + a) / 2.0, x, xc=xc)
    return math.exp(math.log(2.0 / (p + a)) + num - den)


def _fixed_g_scores(p, resid, n, g):
    p = np.asarray(p, dtype=float)
    return 0.5 * (n - 1 - p) * np.log1p(g) - 0.5 * (n - 1) * np.log1p(g * np.asarray(resid))


def score_fixed_g(stats: ModelStats, n: int, g: float) -> float:
    """((n-1-p)/2) log(1+g) - ((n-1)/2) log(1 + g(1-R^2))."""
    if not g >= 0:
        raise DomainError(f"g must be non-negative, got {g}")
    if stats.saturated_centered:
        raise DegenerateModel("centred fit is exact (R^2 = 1)")
    return float(_fixed_g_scores(stats.p_gamma, stats.resid_centered, n, g))


# -- Zellner-Siow -------------------------------------------------------------

def _zs_log_integrand(u, A, B, s, n, shrink):
    # substitution g = exp(u); prior density of g is inverse-gamma(1/2, n/2)
    g = np.exp(u)
    val = (A * np.log1p(g) - B * np.log1p(g * s) - 0.5 * u - 0.5 * n / g
           + 0.5 * math.log(0.5 * n) - 0.5 * math.log(math.pi))
    if shrink:
        val = val - np.log1p(1.0 / g)
    return val


def zs_log_integral(A, B, s, n, shrink=False, tol=1e-10):
    """ln int (1+g)^A (1+g s)^(-B) pi_ZS(g) [g/(1+g)] dg, vectorised over models.

    Step-halving trapezoid rule in ``log g`` over a window holding everything
    within ``e^-45`` of the peak. The integrand is analytic and decays at
    both ends, so the rule converges geometrically.

    Raises
    ------
    QuadratureFailure
        If successive refinements disagree beyond ``tol`` at the finest step.
    """
    A, B, s = np.broadcast_arrays(*(np.atleast_1d(np.asarray(v, dtype=float)) for v in (A, B, s)))
    A, B, s = A[:, None], B[:, None], s[:, None]
    coarse = np.arange(math.log(n) - 30.0, 90.0, 0.25)
    L = _zs_log_integrand(coarse[None, :], A, B, s, n, shrink)
    peak = L.max(axis=1)
    inside = L > (peak[:, None] - 45.0)
    first = inside.argmax(axis=1)
    last = inside.shape[1] - 1 - inside[:, ::-1].argmax(axis=1)
    lo = coarse[np.maximum(first - 1, 0)][:, None]
    hi = coarse[np.minimum(last + 1, coarse.size - 1)][:, None]

    def trap(m):
        t = np.linspace(0.0, 1.0, m + 1)[None, :]
        u = lo + (hi - lo) * t
        vals = _zs_log_integrand(u, A, B, s, n, shrink)
        vals[:, 0] -= math.log(2.0)
        vals[:, -1] -= math.log(2.0)
        return logsumexp(vals, axis=1) + np.log((hi - lo)[:, 0] / m)

    m = 64
    prev = trap(m)
    while True:
        m *= 2
        cur = trap(m)
        if np.all(np.abs(cur - prev) < tol):
            return cur
        if m >= 1 << 14:
            raise QuadratureFailure("Zellner-Siow integral did not settle")
        prev = cur


def _zs_params(stats: ModelStats, n: int, base: str, full_stats: ModelStats | None):
    """(A, B, s, sign) such that score = sign * log integral; None when the score is 0."""
    p = stats.p_gamma
    if base == "NULL":
        if p == 0:
            return None
        return (n - 1 - p) / 2.0, (n - 1) / 2.0, stats.resid_centered, 1.0
    if full_stats is None:
        raise ValueError("ZS-F needs the full model's statistics")
    pf = full_stats.p_gamma
    if p == pf:
        return None
    # Bayes factor of the full model against gamma, with gamma as the base
    return (n - 1 - pf) / 2.0, (n - 1 - p) / 2.0, full_stats.rss / stats.rss, -1.0


def score_zellner_siow(stats: ModelStats, n: int, base: str = "NULL",
                       full_stats: ModelStats | None = None) -> float:
    """Log Bayes factor under the Zellner-Siow prior.

    ``base="NULL"`` scores gamma against the null model. ``base="FULL"``
    scores it by ``-log BF(full : gamma)``, where the Zellner-Siow g-prior is
    placed on the coefficients the full model adds to gamma.
    """
    if stats.saturated_centered:
        raise DegenerateModel("centred fit is exact (R^2 = 1)")
    params = _zs_params(stats, n, base.upper(), full_stats)
    if params is None:
        return 0.0
    A, B, s, sign = params
    return float(sign * zs_log_integral(A, B, s, n)[0])


def shrinkage_zellner_siow(stats: ModelStats, n: int) -> float:
    p = stats.p_gamma
    if p == 0:
        return float("nan")
    A, B, s = (n - 1 - p) / 2.0, (n - 1) / 2.0, stats.resid_centered
    num = zs_log_integral(A, B, s, n, shrink=True)[0]
    den = zs_log_integral(A, B, s, n)[0]
    return float(math.exp(num - den))


# -- empirical Bayes ----------------------------------------------------------


def eb_local_g(stats: ModelStats, n: int) -> float:
    """max(F - 1, 0) with F the usual overall F statistic of the model."""
    p = stats.p_gamma
    if p == 0:
        return 0.0
    r2, resid = stats.r2_centered, stats.resid_centered
    F = (r2 / p) / (resid / (n - 1 - p))
    return max(F - 1.0, 0.0)


def eb_global_g(stats_all, n: int) -> float:
    """Shared g maximising the summed marginal likelihood over ``[0, 1e8]``.

    A grid in ``tau = log(1+g)`` brackets the maximum, which is then located
    as a root of the analytic derivative so that ``g`` is accurate to
    rounding (posterior weights depend on it to first order).
    """
    p = np.array([s.p_gamma for s in stats_all], dtype=float)
    resid = np.array([s.resid_centered for s in stats_all])

    def objective(tau):
        return float(logsumexp(_fixed_g_scores(p, resid, n, math.expm1(tau))))

    def slope(tau):
        g = math.expm1(tau)
        sc = _fixed_g_scores(p, resid, n, g)
        w = np.exp(sc - sc.max())
        d = 0.5 * (n - 1 - p) / (1 + g) - 0.5 * (n - 1) * resid / (1 + g * resid)
        return float((w * d).sum() / w.sum()) * (1 + g)

    taus = np.linspace(0.0, math.log1p(EB_G_MAX), 401)
    vals = np.array([objective(t) for t in taus])
    if not np.isfinite(vals).any():
        raise OptimizationFailure("empirical Bayes objective is not finite")
    i = int(np.argmax(vals))
    lo, hi = taus[max(i - 1, 0)], taus[min(i + 1, taus.size - 1)]
    if slope(lo) > 0 > slope(hi):
        best = brentq(slope, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    else:
        # maximum at an end of the range
        res = minimize_scalar(lambda t: -objective(t), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12})
        best = res.x if -res.fun >= vals[i] else taus[i]
    if objective(0.0) >= objective(best):
        return 0.0
    return float(math.expm1(best))


def score_eb(stats_all, n: int, mode: str = "LOCAL"):
    """Per-model scores at an empirical-Bayes g; returns ``(scores, g_hats)``."""
    mode = mode.upper()
    if mode == "LOCAL":
        g_hat = np.array([eb_local_g(s, n) for s in stats_all])
    elif mode == "GLOBAL":
        g_hat = np.full(len(stats_all), eb_global_g(stats_all, n))
    else:
        raise ValueError(f"unknown EB mode {mode!r}")
    p = np.array([s.p_gamma for s in stats_all])
    resid = np.array([s.resid_centered for s in stats_all])
    return _fixed_g_scores(p, resid, n, g_hat), g_hat


# -- information criteria -----------------------------------------------------


def score_information_criterion(fit, n: int, kind: str = "BIC") -> float:
    """``n log(rss/n) + penalty * (p_gamma + 2)``; smaller is better.

    ``fit`` is a :class:`ModelStats` (or anything with ``rss`` and
    ``p_gamma``).
    """
    if fit.rss <= 0:
        raise ZeroResidual("criterion undefined for a perfect fit")
    penalty = 2.0 if kind.upper() == "AIC" else math.log(n)
    return n * math.log(fit.rss / n) + penalty * (fit.p_gamma + 2)


# ---------------------------------------------------------------------------
# normalisation, MAP, prediction


def normalize_posterior(scores):
    """Softmax of log scores; non-finite entries get probability 0."""
    s = np.asarray(scores, dtype=float)
    finite = np.isfinite(s)
    if not finite.any():
        raise AllDegenerate("no model received a finite score")
    out = np.zeros_like(s)
    out[finite] = np.exp(s[finite] - logsumexp(s[finite]))
    out[finite] /= out[finite].sum()
    return out


def map_model(scores) -> ModelIndicator:
    """Highest posterior probability; ties go to the smaller, then lexicographically first, model."""
    best = min(scores, key=lambda sc: (-sc.posterior_prob, sc.gamma.p_gamma, sc.gamma.bits))
    return best.gamma


@dataclass
class Selection:
    """Scored model space for one selector on one dataset."""

    spec: SelectorSpec
    scores: list[ModelScore]
    n: int
    x_mean: np.ndarray
    y_mean: float
    coefficients: dict = field(repr=False, default_factory=dict)
    degenerate: list[ModelIndicator] = field(default_factory=list)
    g_hat: float | None = None

    @property
    def map(self) -> ModelIndicator:
        return map_model(self.scores)

    def top(self, k: int = 5) -> list[ModelScore]:
        return sorted(self.scores, key=lambda sc: (-sc.posterior_prob, sc.gamma.p_gamma,
                                                   sc.gamma.bits))[:k]

    def inclusion_probabilities(self) -> np.ndarray:
        p = len(self.scores[0].gamma)
        out = np.zeros(p)
        for sc in self.scores:
            out += sc.posterior_prob * sc.gamma.mask
        return out

    def predict(self, X_new) -> np.ndarray:
        return bma_predict(self, X_new)


def bma_predict(selection: Selection, X_new) -> np.ndarray:
    """Model-averaged prediction, each model's OLS fit scaled by its shrinkage.

    Non-centred (NIMS): ``sum_g P(g) s_g X_g beta_g``, intercept included.
    Centred: ``ybar + sum_g P(g) s_g (X_g - xbar_g) beta_g``.
    Criteria (AIC/BIC): OLS prediction of the selected model.
    """
    X_new = np.atleast_2d(np.asarray(X_new, dtype=float))
    p = selection.x_mean.size
    if X_new.shape[1] != p:
        raise ShapeMismatch(f"X_new has {X_new.shape[1]} columns, expected {p}")
    if selection.spec.is_criterion:
        gamma = selection.map
        beta = selection.coefficients[gamma]
        return beta[0] + X_new[:, gamma.mask] @ beta[1:]
    out = np.zeros(X_new.shape[0])
    if selection.spec.convention is Convention.M_GAMMA:
        for sc in selection.scores:
            if sc.posterior_prob == 0.0:
                continue
            beta = selection.coefficients[sc.gamma]
            fit = beta[0] + X_new[:, sc.gamma.mask] @ beta[1:]
            out += sc.posterior_prob * sc.shrinkage * fit
        return out
    Xc = X_new - selection.x_mean
    for sc in selection.scores:
        if sc.posterior_prob == 0.0 or sc.gamma.p_gamma == 0:
            continue
        beta = selection.coefficients[sc.gamma]
        out += sc.posterior_prob * sc.shrinkage * (Xc[:, sc.gamma.mask] @ beta[1:])
    return selection.y_mean + out


def _score_one(spec: SelectorSpec, st: ModelStats, n: int, p: int, full_stats):
    kind = spec.kind
    if kind is Kind.NIMS:
        return score_nims(st, n), shrinkage_nims(st, n)
    if kind is Kind.HYPER_G:
        shrink = shrinkage_hyper_g(st, n, spec.a) if st.p_gamma else None
        return score_hyper_g(st, n, spec.a), shrink
    if kind is Kind.FIXED_G:
        g = spec.resolve_g(n, p)
        return score_fixed_g(st, n, g), g / (1.0 + g)
    if kind in (Kind.AIC, Kind.BIC):
        return -0.5 * score_information_criterion(st, n, kind.value), None
    raise AssertionError(kind)


def fit_selector(spec: SelectorSpec, data, precomputed=None) -> Selection:
    """Enumerate, score and normalise the model space of ``data``.

    ``precomputed`` may carry ``(models, stats)`` from
    :func:`gpsel.models.all_model_stats` so several selectors share one pass
    of QR fits. Degenerate or non-integrable models are left out of the
    posterior and listed in ``Selection.degenerate``.
    """
    X = np.asarray(data.X, dtype=float)
    y = np.asarray(data.y, dtype=float)
    n, p = X.shape
    if precomputed is None:
        models, stats, skipped = all_model_stats(data)
    else:
        models, stats = precomputed
        skipped = []
    keep = [(g, s) for g, s in zip(models, stats) if spec.include_null or g.p_gamma > 0]
    degenerate = list(skipped)
    kind = spec.kind
    full_stats = None
    if kind is Kind.ZS_FULL:
        full = [s for g, s in keep if g.p_gamma == p]
        if not full:
            raise DegenerateModel("ZS-F needs the full model to be estimable")
        full_stats = full[0]

    gammas, logs, shrinks = [], [], []
    g_hat = None
    if kind in (Kind.ZS_NULL, Kind.ZS_FULL, Kind.EB_LOCAL, Kind.EB_GLOBAL):
        ok = []
        for g, s in keep:
            if s.saturated_centered:
                degenerate.append(g)
            else:
                ok.append((g, s))
        gammas = [g for g, _ in ok]
        sts = [s for _, s in ok]
        if not sts:
            raise AllDegenerate("every model is saturated")
        if kind in (Kind.EB_LOCAL, Kind.EB_GLOBAL):
            sc, gh = score_eb(sts, n, "LOCAL" if kind is Kind.EB_LOCAL else "GLOBAL")
            logs = list(sc)
            shrinks = [gi / (1.0 + gi) if s.p_gamma else None for gi, s in zip(gh, sts)]
            if kind is Kind.EB_GLOBAL:
                g_hat = float(gh[0])
        else:
            logs, shrinks = _zs_scores(sts, n, "NULL" if kind is Kind.ZS_NULL else "FULL",
                                       full_stats)
    else:
        for g, s in keep:
            try:
                lm, shrink = _score_one(spec, s, n, p, full_stats)
            except (DegenerateModel, IntegrabilityError, ZeroResidual):
                degenerate.append(g)
                continue
            gammas.append(g)
            logs.append(lm)
            shrinks.append(shrink)
    if not gammas:
        raise AllDegenerate("no model could be scored")
    probs = normalize_posterior(logs)
    coefs = {g: s.coefficients for g, s in zip(models, stats)}
    scores = [ModelScore(g, float(lm), float(pr), None if sh is None else float(sh))
              for g, lm, pr, sh in zip(gammas, logs, probs, shrinks)]
    return Selection(spec, scores, n, X.mean(axis=0), float(y.mean()), coefs, degenerate, g_hat)


def _zs_scores(sts, n, base, full_stats):
    idx = [i for i, s in enumerate(sts) if s.p_gamma > 0]
    shrinks = [None] * len(sts)
    logs = np.zeros(len(sts))
    if idx:
        p = np.array([sts[i].p_gamma for i in idx], dtype=float)
        resid = np.array([sts[i].resid_centered for i in idx])
        A, B = (n - 1 - p) / 2.0, np.full(p.size, (n - 1) / 2.0)
        den = zs_log_integral(A, B, resid, n)
        num = zs_log_integral(A, B, resid, n, shrink=True)
        for j, i in enumerate(idx):
            shrinks[i] = float(math.exp(num[j] - den[j]))
        if base == "NULL":
            logs[idx] = den
    if base == "FULL":
        pf = full_stats.p_gamma
        jdx = [i for i, s in enumerate(sts) if s.p_gamma < pf]
        if jdx:
            p = np.array([sts[i].p_gamma for i in jdx], dtype=float)
            rss = np.array([sts[i].rss for i in jdx])
            A = np.full(p.size, (n - 1 - pf) / 2.0)
            logs[jdx] = -zs_log_integral(A, (n - 1 - p) / 2.0, full_stats.rss / rss, n)
    return list(logs), shrinks


def select(spec: SelectorSpec, data) -> Selection:
    return fit_selector(spec, data)


__all__ = [
    "Kind", "Convention", "SelectorSpec", "ModelScore", "Selection",
    "NIMS", "HG2", "HG3", "HG4", "BRIC", "ZS_N", "ZS_F", "EB_L", "EB_G", "AIC", "BIC",
    "ALL_SELECTORS", "parse_selector",
    "score_nims", "score_hyper_g", "score_fixed_g", "score_zellner_siow", "score_eb",
    "score_information_criterion", "normalize_posterior", "shrinkage_nims",
    "shrinkage_hyper_g", "shrinkage_zellner_siow", "eb_local_g", "eb_global_g",
    "zs_log_integral", "bma_predict", "map_model", "fit_selector", "enumerate_models",
]
