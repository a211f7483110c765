"""Lasso, elastic net and Dantzig selector with cross-validated tuning.

Objectives, on standardised predictors (mean 0, ``||x_j||^2 = n``) and a
centred response, with the intercept restored afterwards as
``ybar - xbar' beta``:

* lasso        ``||y - X b||^2 + lam * |b|_1``
* elastic net  ``||y - X b||^2 + lam * |b|_1 + mu * ||b||^2``
* Dantzig      ``min |b|_1``  s.t.  ``||X'(y - X b)||_inf <= lam``

Coordinate descent works on the Gram matrix and is vectorised over a batch
of independent problems (the folds of a cross-validation, times the mu
grid), so a whole leave-one-out path costs about as much as a single fit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import Infeasible, NoConvergence, ShapeMismatch, TuningFailure, Unbounded
from .models import ModelIndicator
from .simplex import LpProblem, dual_simplex_path, simplex_solve

CD_TOL = 1e-9
MAX_CYCLES = 100_000
SUPPORT_TOL = 1e-8
N_LAMBDA = 100
LAMBDA_RATIO = 1e-3
MU_GRID = (0.01, 0.1, 1.0, 10.0)
METHODS = ("LASSO", "ENET", "DZ")
GRIDS = ("fraction", "lambda")
N_PATH = 200  # penalties used to trace a path for the fraction grid
PATH_RATIO = 1e-4


@dataclass(frozen=True)
class Standardized:
    """Centred and scaled copy of a design, with the maps back."""

    X: np.ndarray
    y: np.ndarray
    x_mean: np.ndarray
    x_scale: np.ndarray
    y_mean: float

    def to_original(self, beta_std: np.ndarray) -> np.ndarray:
        """``[intercept, slopes]`` on the original scale."""
        slopes = beta_std / self.x_scale
        return np.concatenate([[self.y_mean - self.x_mean @ slopes], slopes])

    def predict(self, beta_std: np.ndarray, X_new) -> np.ndarray:
        return self.y_mean + ((np.asarray(X_new) - self.x_mean) / self.x_scale) @ beta_std


def standardize(X, y) -> Standardized:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.shape[0] != y.shape[0]:
        raise ShapeMismatch(f"X has {X.shape[0]} rows, y has {y.shape[0]}")
    n = X.shape[0]
    xm = X.mean(axis=0)
    Xc = X - xm
    scale = np.sqrt((Xc * Xc).sum(axis=0) / n)
    scale[scale == 0] = 1.0  # constant column stays at zero
    ym = float(y.mean())
    return Standardized(Xc / scale, y - ym, xm, scale, ym)


@dataclass(frozen=True)
class RegFit:
    method: str
    lam: float
    mu: float
    coefficients: np.ndarray  # intercept first, original scale
    coef_std: np.ndarray  # standardised scale, used for the support

    @property
    def support(self) -> ModelIndicator:
        return selected_support(self.coef_std)

    def predict(self, X_new) -> np.ndarray:
        X_new = np.atleast_2d(np.asarray(X_new, dtype=float))
        return self.coefficients[0] + X_new @ self.coefficients[1:]


@dataclass
class RegPath:
    lambda_grid: np.ndarray
    mu: float
    coefficients: np.ndarray  # (len(grid), p + 1), full-data fits
    cv_error: np.ndarray = field(default_factory=lambda: np.zeros(0))


def selected_support(coefficients, tol: float = SUPPORT_TOL) -> ModelIndicator:
    return ModelIndicator.from_mask(np.abs(np.asarray(coefficients)) > tol)


# ---------------------------------------------------------------------------
# coordinate descent


def _soft(z, t):
    return np.sign(z) * np.maximum(np.abs(z) - t, 0.0)


def _objective(G, c, yty, beta, lam, mu):
    quad = np.einsum("bi,bij,bj->b", beta, G, beta)
    return yty - 2 * (c * beta).sum(1) + quad + lam * np.abs(beta).sum(1) + mu * (beta * beta).sum(1)


def _polish(G, c, lam, mu, beta):
    """Exact minimiser for the current sign pattern, where it passes the KKT check.

    On the active set A the stationarity condition is linear:
    ``(G_AA + mu I) b_A = c_A - (lam/2) s_A``. The candidate is accepted
    only if its signs match ``s_A`` and every inactive coordinate satisfies
    ``|c_j - G_jA b_A| <= lam/2``. Returns a mask of accepted problems.
    """
    B, p = c.shape
    active = beta != 0
    s = np.sign(beta)
    eye = np.eye(p)
    both = active[:, :, None] & active[:, None, :]
    M = np.where(both, G + mu[:, None, None] * eye, eye)
    rhs = np.where(active, c - 0.5 * lam[:, None] * s, 0.0)
    try:
        cand = np.linalg.solve(M, rhs[:, :, None])[:, :, 0]
    except np.linalg.LinAlgError:
        return np.zeros(B, dtype=bool)
    grad = c - np.einsum("bij,bj->bi", G, cand) - mu[:, None] * cand
    slack = 0.5 * lam[:, None] * (1 + 1e-12) + 1e-12 * np.abs(c).max(axis=1, keepdims=True)
    ok = (np.where(active, np.sign(cand) == s, np.abs(grad) <= slack)).all(axis=1)
    beta[ok] = cand[ok]
    return ok


def _cd_batch(G, c, lam, mu, beta, tol=CD_TOL, max_cycles=MAX_CYCLES, history=None, yty=None):
    """Cyclic coordinate descent for a batch of Gram-form problems.

    ``G`` is (B, p, p), ``c = X'y`` is (B, p), ``lam`` and ``mu`` are (B,).
    ``beta`` (B, p) is the warm start and is updated in place. After each
    cycle the active-set solution is tried (see :func:`_polish`); a problem
    is done once that succeeds or no coordinate moved by more than ``tol``.
    """
    B, p = c.shape
    diag = np.einsum("bjj->bj", G)
    denom = diag + mu[:, None]
    safe = np.where(denom > 0, denom, 1.0)
    half = 0.5 * lam
    done = np.zeros(B, dtype=bool)
    resid = c - np.einsum("bij,bj->bi", G, beta)  # X'(y - X beta)
    for _ in range(max_cycles):
        delta = 0.0
        for j in range(p):
            z = resid[:, j] + diag[:, j] * beta[:, j]
            new = np.where(denom[:, j] > 0, _soft(z, half) / safe[:, j], 0.0)
            step = np.where(done, 0.0, new - beta[:, j])
            if step.any():
                beta[:, j] += step
                resid -= G[:, :, j] * step[:, None]
                delta = max(delta, float(np.abs(step).max()))
        todo = ~done
        if todo.any():
            sub = beta[todo]
            ok = _polish(G[todo], c[todo], lam[todo], mu[todo], sub)
            beta[todo] = sub
            idx = np.flatnonzero(todo)[ok]
            done[idx] = True
            resid[idx] = c[idx] - np.einsum("bij,bj->bi", G[idx], beta[idx])
        if history is not None:
            history.append(_objective(G, c, yty, beta, lam, mu))
        if done.all() or delta < tol:
            return beta
    raise NoConvergence(f"coordinate descent did not converge in {max_cycles} cycles")


def coordinate_descent(X, y, lam: float, mu: float = 0.0, beta0=None, tol: float = CD_TOL,
                       history: list | None = None) -> np.ndarray:
    """Minimise ``||y - X b||^2 + lam |b|_1 + mu ||b||^2`` as given (no intercept).

    When ``history`` is a list, the objective after every cycle is appended.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if lam < 0 or mu < 0:
        raise ValueError("lam and mu must be non-negative")
    G = (X.T @ X)[None]
    c = (X.T @ y)[None]
    beta = np.zeros((1, X.shape[1])) if beta0 is None else np.array(beta0, dtype=float)[None]
    hist = [] if history is not None else None
    _cd_batch(G, c, np.array([lam]), np.array([mu]), beta, tol, history=hist,
              yty=np.array([y @ y]))
    if history is not None:
        history.extend(float(h[0]) for h in hist)
    return beta[0]


def kkt_residual(X, y, beta, lam: float, mu: float = 0.0) -> float:
    """Largest violation of the subgradient optimality conditions."""
    X = np.asarray(X, dtype=float)
    g = 2 * X.T @ (y - X @ beta) - 2 * mu * beta
    active = np.abs(beta) > 0
    viol = np.where(active, np.abs(g - lam * np.sign(beta)), np.maximum(np.abs(g) - lam, 0.0))
    return float(viol.max()) if viol.size else 0.0


def _fit_std(method, std: Standardized, lam, mu, beta0=None):
    if method == "DZ":
        return _dantzig_std(std.X, std.y, lam)
    return coordinate_descent(std.X, std.y, lam, mu if method == "ENET" else 0.0, beta0)


def lasso_cd(data, lam: float) -> RegFit:
    std = standardize(data.X, data.y)
    beta = coordinate_descent(std.X, std.y, lam)
    return RegFit("LASSO", lam, 0.0, std.to_original(beta), beta)


def enet_cd(data, lam: float, mu: float) -> RegFit:
    std = standardize(data.X, data.y)
    beta = coordinate_descent(std.X, std.y, lam, mu)
    return RegFit("ENET", lam, mu, std.to_original(beta), beta)


# ---------------------------------------------------------------------------
# Dantzig selector


def dantzig_problem(X, y, lam: float) -> LpProblem:
    """LP in ``(b+, b-) >= 0``: min sum, ``-lam <= X'y - G(b+ - b-) <= lam``."""
    G = X.T @ X
    c = X.T @ y
    A = np.block([[G, -G], [-G, G]])
    rhs = np.concatenate([lam + c, lam - c])
    return LpProblem(np.ones(2 * X.shape[1]), A, rhs, ("<=",) * (2 * X.shape[1]))


def _dantzig_std(X, y, lam):
    p = X.shape[1]
    if lam >= np.abs(X.T @ y).max():
        return np.zeros(p)
    try:
        z, _ = simplex_solve(dantzig_problem(X, y, lam))
    except Unbounded as exc:
        raise Unbounded(f"Dantzig LP unbounded (encoding error): {exc}") from exc
    except Infeasible as exc:
        raise Infeasible(f"Dantzig LP reported infeasible: {exc}") from exc
    return z[:p] - z[p:]


def _dantzig_path_std(X, y, lambdas):
    """Dantzig solutions along a descending grid, warm-started by dual simplex.

    Any point whose constraint residual exceeds ``lam + 1e-8`` is re-solved
    from scratch with the two-phase solver.
    """
    p = X.shape[1]
    G = X.T @ X
    c = X.T @ y
    A = np.block([[G, -G], [-G, G]])
    lambdas = np.asarray(lambdas, dtype=float)
    top = float(np.abs(c).max())
    out = np.zeros((lambdas.size, p))
    live = np.flatnonzero(lambdas < top)
    if live.size:
        ts = np.concatenate([[top], lambdas[live]])
        z = dual_simplex_path(A, np.ones(2 * p), np.concatenate([c, -c]), np.ones(2 * p), ts)[1:]
        out[live] = z[:, :p] - z[:, p:]
    for i in live:
        if np.abs(c - G @ out[i]).max() > lambdas[i] + 1e-8:
            out[i] = _dantzig_std(X, y, lambdas[i])
    return out


def dantzig_lp(data, lam: float) -> RegFit:
    std = standardize(data.X, data.y)
    beta = _dantzig_std(std.X, std.y, lam)
    return RegFit("DZ", lam, 0.0, std.to_original(beta), beta)


def dantzig_residual(data, fit: RegFit) -> float:
    """``||X'(y - X b)||_inf`` on the standardised scale."""
    std = standardize(data.X, data.y)
    return float(np.abs(std.X.T @ (std.y - std.X @ fit.coef_std)).max())


# ---------------------------------------------------------------------------
# grids and tuning
#
# Two tuning grids are offered. "lambda": 100 log-spaced penalties from
# lambda_max down to 1e-3 lambda_max, shared by every fold. "fraction"
# (default): 100 equally spaced values of s = |b(lam)|_1 / |b(0)|_1 in
# [0, 1]; each fold's path is traced on a fine penalty grid and read off at
# the same fractions, so folds are compared at equal relative shrinkage
# rather than at equal penalty.


def lambda_max(method: str, X_std, y_c) -> float:
    """Smallest penalty at which every coefficient is zero."""
    top = float(np.abs(X_std.T @ y_c).max())
    return top if method == "DZ" else 2.0 * top


def lambda_grid(lmax: float, count: int = N_LAMBDA, ratio: float = LAMBDA_RATIO) -> np.ndarray:
    # a response orthogonal to every column gives lmax = 0; all fits are zero
    lmax = lmax if lmax > 0 else 1.0
    if count == 1:
        return np.array([lmax])
    return np.geomspace(lmax, ratio * lmax, count)


def _fold_problems(X, y, folds):
    stds, G, c = [], [], []
    for test in folds:
        train = np.setdiff1d(np.arange(X.shape[0]), test)
        s = standardize(X[train], y[train])
        stds.append(s)
        G.append(s.X.T @ s.X)
        c.append(s.X.T @ s.y)
    return stds, np.array(G), np.array(c)


def _cd_path(G, c, lambdas, mu):
    """Warm-started paths for a batch; returns (len(lambdas), B, p)."""
    B, p = c.shape
    beta = np.zeros((B, p))
    out = np.empty((len(lambdas), B, p))
    for i, lam in enumerate(lambdas):
        _cd_batch(G, c, np.full(B, lam), mu, beta)
        out[i] = beta
    return out


def _paths(method, G, c, lambdas, mu, stds=None):
    """Batch of paths on ``lambdas``; (L, B, p)."""
    if method == "DZ":
        return np.stack([_dantzig_path_std(s.X, s.y, lambdas) for s in stds], axis=1)
    return _cd_path(G, c, lambdas, mu)


def _endpoints(G, c, mu, fallback):
    """Unpenalised-l1 limit ``(G + mu I)^-1 c`` per problem, or ``fallback`` if singular."""
    out = fallback.copy()
    p = c.shape[1]
    for b in range(c.shape[0]):
        M = G[b] + mu[b] * np.eye(p)
        if np.linalg.matrix_rank(M) == p:
            out[b] = np.linalg.solve(M, c[b])
    return out


def _at_fractions(path, lambdas, fractions):
    """Read paths off at l1 fractions by linear interpolation along the path.

    ``path`` is (L, B, p) ordered by decreasing penalty with the unpenalised
    end last. Between breakpoints both the coefficients and their l1 norm
    are linear in the penalty, so the interpolation is exact there.
    Returns coefficients (S, B, p) and the matching penalties (S, B).
    """
    L, B, p = path.shape
    l1 = np.maximum.accumulate(np.abs(path).sum(axis=2), axis=0)
    out = np.zeros((len(fractions), B, p))
    lam = np.zeros((len(fractions), B))
    for b in range(B):
        if l1[-1, b] <= 0:
            lam[:, b] = lambdas[0]
            continue
        frac = l1[:, b] / l1[-1, b]
        hi = np.clip(np.searchsorted(frac, fractions, side="left"), 1, L - 1)
        lo = hi - 1
        span = frac[hi] - frac[lo]
        w = np.where(span > 0, (fractions - frac[lo]) / np.where(span > 0, span, 1.0), 0.0)
        w = np.clip(w, 0.0, 1.0)
        out[:, b] = (1 - w)[:, None] * path[lo, b] + w[:, None] * path[hi, b]
        lam[:, b] = (1 - w) * lambdas[lo] + w * lambdas[hi]
    return out, lam


def _homotopy(G, c, mu: float = 0.0, max_steps: int | None = None):
    """Exact piecewise-linear path of ``||y - Xb||^2 + lam |b|_1 + mu ||b||^2``.

    Works on the Gram form ``G = X'X``, ``c = X'y`` in ``t = lam / 2``.
    Along a segment with active set A and signs s the solution is
    ``b_A = (G_AA + mu I)^-1 (c_A - t s_A)``; a breakpoint is where an
    inactive correlation reaches ``t`` or an active coefficient reaches zero.
    Returns ``(lambdas, betas)`` at the breakpoints, ``lambdas`` decreasing
    and ending at 0 unless the active system becomes singular first, or
    ``None`` if the step budget runs out.
    """
    p = c.size
    H = G + mu * np.eye(p)
    t = float(np.abs(c).max())
    beta = np.zeros(p)
    if t <= 0:
        return np.array([0.0]), beta[None]
    active = np.zeros(p, dtype=bool)
    signs = np.zeros(p)
    j = int(np.argmax(np.abs(c)))
    active[j], signs[j] = True, np.sign(c[j])
    ts, betas = [t], [beta.copy()]
    tiny = 1e-12 * t
    just_left = -1
    for _ in range(max_steps or 20 * p):
        A = np.flatnonzero(active)
        try:
            d = -np.linalg.solve(H[np.ix_(A, A)], signs[A])  # d b_A / d t
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(d)) or np.linalg.cond(H[np.ix_(A, A)]) > 1e12:
            break
        r = c - H @ beta
        dr = -H[:, A] @ d
        # lowering t by delta moves b_A by -delta d and r by -delta dr
        step, event, who = t, "end", -1
        with np.errstate(divide="ignore", invalid="ignore"):
            for sgn in (1.0, -1.0):
                cand = (t - sgn * r) / (1.0 - sgn * dr)
                cand[active | (cand <= tiny) | ~np.isfinite(cand)] = np.inf
                if just_left >= 0:
                    cand[just_left] = np.inf
                k = int(np.argmin(cand))
                if cand[k] < step:
                    step, event, who = float(cand[k]), "join", k
            leave = beta[A] / d
            leave[(leave <= tiny) | ~np.isfinite(leave)] = np.inf
            k = int(np.argmin(leave)) if leave.size else -1
            if k >= 0 and leave[k] < step:
                step, event, who = float(leave[k]), "leave", int(A[k])
        beta[A] -= step * d
        t -= step
        just_left = -1
        if event == "end":
            ts.append(0.0)
            betas.append(beta.copy())
            return 2.0 * np.array(ts), np.array(betas)
        if event == "join":
            active[who] = True
            signs[who] = np.sign((c - H @ beta)[who])
        else:
            active[who] = False
            signs[who] = 0.0
            beta[who] = 0.0
            just_left = who
        ts.append(t)
        betas.append(beta.copy())
        if not active.any():
            break
    else:
        return None
    return 2.0 * np.array(ts), np.array(betas)


def _fraction_grid_paths(method, G, c, mu, stds, n_grid):
    """Coefficients (S, B, p) and penalties (S, B) at ``n_grid`` l1 fractions.

    Lasso and elastic-net paths are traced exactly by homotopy (falling back
    to coordinate descent on a fine grid if it stalls); Dantzig paths come
    from warm-started dual simplex on a fine grid.
    """
    fractions = np.linspace(0.0, 1.0, n_grid)
    B, p = c.shape
    out = np.zeros((n_grid, B, p))
    lam = np.zeros((n_grid, B))
    for b in range(B):
        exact = None if method == "DZ" else _homotopy(G[b], c[b], mu[b])
        if exact is not None:
            lambdas, path = exact
        else:
            lambdas = lambda_grid(lambda_max(method, stds[b].X, stds[b].y), N_PATH, PATH_RATIO)
            path = _paths(method, G[b:b + 1], c[b:b + 1], lambdas, mu[b:b + 1],
                          stds[b:b + 1])[:, 0, :]
            end = _endpoints(G[b:b + 1], c[b:b + 1], mu[b:b + 1], path[-1:])[0]
            path = np.vstack([path, end])
            lambdas = np.concatenate([lambdas, [0.0]])
        coefs, lams = _at_fractions(path[:, None, :], lambdas, fractions)
        out[:, b], lam[:, b] = coefs[:, 0], lams[:, 0]
    return out, lam


def _cv_errors(method, X, y, folds, mus, grid, n_grid, ratio, lambdas=None):
    """Mean squared held-out error for every (mu, grid point); shape (M, S)."""
    stds, G, c = _fold_problems(X, y, folds)
    F = len(folds)
    M = len(mus)
    Gb = np.tile(G, (M, 1, 1))
    cb = np.tile(c, (M, 1))
    mub = np.repeat(np.asarray(mus, dtype=float), F)
    stdb = stds * M
    if grid == "fraction":
        paths, _ = _fraction_grid_paths(method, Gb, cb, mub, stdb, n_grid)
    else:
        paths = _paths(method, Gb, cb, lambdas, mub, stdb)
    paths = paths.reshape(paths.shape[0], M, F, -1)
    sq = np.zeros((M, paths.shape[0]))
    count = 0
    for f, (test, s) in enumerate(zip(folds, stds)):
        Xt = (X[test] - s.x_mean) / s.x_scale
        pred = s.y_mean + np.einsum("tp,lmp->mlt", Xt, paths[:, :, f, :])
        sq += ((pred - y[test]) ** 2).sum(axis=2)
        count += len(test)
    return sq / count


def loo_folds(n: int):
    return [np.array([i]) for i in range(n)]


def kfold_folds(n: int, k: int, rng: np.random.Generator):
    perm = rng.permutation(n)
    return [np.sort(part) for part in np.array_split(perm, k)]


@dataclass(frozen=True)
class TuneResult:
    method: str
    lam: float
    mu: float
    fit: RegFit
    path: RegPath
    cv_error: np.ndarray  # (len(mu grid), grid points)
    fraction: float | None = None


def _full_path(method, full: Standardized, mu, grid, n_grid, ratio):
    G = (full.X.T @ full.X)[None]
    c = (full.X.T @ full.y)[None]
    mu_b = np.array([mu])
    if grid == "fraction":
        coefs, lams = _fraction_grid_paths(method, G, c, mu_b, [full], n_grid)
        return coefs[:, 0, :], lams[:, 0], np.linspace(0.0, 1.0, n_grid)
    lambdas = lambda_grid(lambda_max(method, full.X, full.y), n_grid, ratio)
    return _paths(method, G, c, lambdas, mu_b, [full])[:, 0, :], lambdas, None


def tune(data, method: str, folds=None, grid: str = "fraction", n_grid: int = N_LAMBDA,
         ratio: float = LAMBDA_RATIO, mu_grid=MU_GRID) -> TuneResult:
    """Pick the penalty by cross-validation and refit on all rows.

    ``folds`` defaults to leave-one-out; ``grid`` is ``"fraction"`` or
    ``"lambda"`` (see the module notes). Ties in CV error go to the more
    heavily penalised point, then to the smaller mu.

    Raises
    ------
    TuningFailure
        If no grid point has a finite CV error.
    """
    method = method.upper()
    if method not in METHODS:
        raise ValueError(f"unknown regularizer {method!r}")
    if grid not in GRIDS:
        raise ValueError(f"grid must be one of {GRIDS}")
    X = np.asarray(data.X, dtype=float)
    y = np.asarray(data.y, dtype=float)
    n = X.shape[0]
    if n < 3:
        raise TuningFailure("need at least 3 rows to tune")
    folds = loo_folds(n) if folds is None else folds
    full = standardize(X, y)
    mus = tuple(mu_grid) if method == "ENET" else (0.0,)
    lambdas = None
    if grid == "lambda":
        lambdas = lambda_grid(lambda_max(method, full.X, full.y), n_grid, ratio)
    errs = _cv_errors(method, X, y, folds, mus, grid, n_grid, ratio, lambdas)
    if not np.isfinite(errs).any():
        raise TuningFailure("cross-validation error is not finite anywhere")
    errs = np.where(np.isfinite(errs), errs, np.inf)
    m_best, k_best = np.unravel_index(np.argmin(errs), errs.shape)
    mu = float(mus[m_best])

    # the full-data path is traced for the chosen mu only
    coefs, lams, _ = _full_path(method, full, mu, grid, n_grid, ratio)
    orig = np.array([full.to_original(b) for b in coefs])
    path = RegPath(lams, mu, orig, errs[m_best])
    lam = float(lams[k_best])
    beta = coefs[k_best]
    if lam > 0:
        # re-solve at the interpolated penalty so the fit is a certified optimum
        beta = _fit_std(method, full, lam, mu, beta)
    fit = RegFit(method, lam, mu, full.to_original(beta), beta)
    frac = float(np.linspace(0.0, 1.0, n_grid)[k_best]) if grid == "fraction" else None
    return TuneResult(method, lam, mu, fit, path, errs, frac)


def tune_loo(data, method: str, **kw) -> TuneResult:
    return tune(data, method, folds=None, **kw)


def regularization_path(data, method: str, lambdas=None, mu: float = 0.0) -> RegPath:
    """Full-data coefficient path over a descending lambda grid."""
    method = method.upper()
    full = standardize(data.X, data.y)
    if lambdas is None:
        lambdas = lambda_grid(lambda_max(method, full.X, full.y))
    lambdas = np.asarray(lambdas, dtype=float)
    G = (full.X.T @ full.X)[None]
    c = (full.X.T @ full.y)[None]
    m = mu if method == "ENET" else 0.0
    betas = _paths(method, G, c, lambdas, np.array([m]), [full])[:, 0, :]
    coefs = np.array([full.to_original(b) for b in betas])
    return RegPath(lambdas, mu, coefs)
