"""Dense two-phase primal simplex for small linear programs.

Problems are ``min c'x`` subject to ``A x (<=, =, >=) b`` and ``x >= 0``.
Entering columns follow Dantzig's largest-reduced-cost rule while the
objective keeps improving; after a run of degenerate pivots the solver
switches to Bland's smallest-index rule, which cannot cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Infeasible, IterationLimit, ShapeMismatch, Unbounded

MAX_DIM = 500
MAX_PIVOTS = 1_000_000
_PIV_TOL = 1e-11
_OPT_TOL = 1e-9
_DEGENERATE_STREAK = 8


@dataclass(frozen=True)
class LpProblem:
    objective: np.ndarray
    constraint_matrix: np.ndarray
    rhs: np.ndarray
    sense: tuple[str, ...]  # each "<=", "=" or ">="

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=float).ravel()
        A = np.atleast_2d(np.asarray(self.constraint_matrix, dtype=float))
        b = np.asarray(self.rhs, dtype=float).ravel()
        sense = tuple(self.sense)
        if A.shape != (b.size, c.size) or len(sense) != b.size:
            raise ShapeMismatch(f"A {A.shape}, b {b.size}, c {c.size}, sense {len(sense)}")
        if any(s not in ("<=", "=", ">=") for s in sense):
            raise ValueError(f"bad constraint sense in {sense}")
        if not (np.isfinite(A).all() and np.isfinite(b).all() and np.isfinite(c).all()):
            raise ValueError("LP data must be finite")
        if max(A.shape) > MAX_DIM:
            raise ShapeMismatch(f"dense guard: LP of shape {A.shape} exceeds {MAX_DIM}")
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "constraint_matrix", A)
        object.__setattr__(self, "rhs", b)
        object.__setattr__(self, "sense", sense)


@dataclass
class _Tableau:
    T: np.ndarray  # rows 0..m-1 constraints, row m objective (reduced costs | -value)
    basis: np.ndarray
    pivots: int = 0

    def pivot(self, r: int, col: int):
        T = self.T
        T[r] /= T[r, col]
        factors = T[:, col].copy()
        factors[r] = 0.0
        T -= np.outer(factors, T[r])
        self.basis[r] = col
        self.pivots += 1
        if self.pivots > MAX_PIVOTS:
            raise IterationLimit(f"more than {MAX_PIVOTS} pivots")

    def run(self, allowed: np.ndarray):
        """Primal simplex on the columns flagged in ``allowed``."""
        T = self.T
        m = T.shape[0] - 1
        streak = 0
        while True:
            red = T[m, :-1]
            candidates = np.flatnonzero((red < -_OPT_TOL) & allowed)
            if candidates.size == 0:
                return
            if streak >= _DEGENERATE_STREAK:
                col = int(candidates[0])
            else:
                col = int(candidates[np.argmin(red[candidates])])
            column = T[:m, col]
            pos = column > _PIV_TOL
            if not pos.any():
                raise Unbounded("objective is unbounded below")
            ratios = np.full(m, np.inf)
            ratios[pos] = T[:m, -1][pos] / column[pos]
            best = ratios.min()
            # ties go to the smallest basic index (Bland)
            tied = np.flatnonzero(ratios <= best + 1e-12 * max(1.0, abs(best)))
            r = int(tied[np.argmin(self.basis[tied])])
            streak = streak + 1 if best <= 1e-12 else 0
            self.pivot(r, col)


def simplex_solve(lp: LpProblem):
    """Solve ``lp``; returns ``(x, objective)`` at an optimal vertex.

    Raises
    ------
    Infeasible
        If phase one cannot drive the artificial variables to zero.
    Unbounded
        If the objective decreases without bound.
    IterationLimit
        After one million pivots.
    """
    c, A, b = lp.objective, lp.constraint_matrix.copy(), lp.rhs.copy()
    sense = list(lp.sense)
    m, n = A.shape
    neg = b < 0
    A[neg] *= -1.0
    b[neg] *= -1.0
    flip = {"<=": ">=", ">=": "<=", "=": "="}
    sense = [flip[s] if f else s for s, f in zip(sense, neg)]

    n_slack = sum(s != "=" for s in sense)
    n_art = sum(s != "<=" for s in sense)
    width = n + n_slack + n_art
    T = np.zeros((m + 1, width + 1))
    T[:m, :n] = A
    T[:m, -1] = b
    basis = np.empty(m, dtype=int)
    k_slack, k_art = n, n + n_slack
    art_cols = []
    for i, s in enumerate(sense):
        if s == "<=":
            T[i, k_slack] = 1.0
            basis[i] = k_slack
            k_slack += 1
        else:
            if s == ">=":
                T[i, k_slack] = -1.0
                k_slack += 1
            T[i, k_art] = 1.0
            basis[i] = k_art
            art_cols.append(k_art)
            k_art += 1
    tab = _Tableau(T, basis)
    is_art = np.zeros(width, dtype=bool)
    is_art[art_cols] = True

    if art_cols:
        # phase one: minimise the sum of artificials
        T[m, :] = 0.0
        T[m, art_cols] = 1.0
        for i in range(m):
            if is_art[basis[i]]:
                T[m] -= T[i]
        tab.run(np.ones(width, dtype=bool))
        if -T[m, -1] > 1e-9 * max(1.0, np.abs(b).max()):
            raise Infeasible("no point satisfies the constraints")
        # drive remaining (zero-level) artificials out of the basis
        for i in range(m):
            if is_art[basis[i]]:
                row = T[i, :width].copy()
                row[is_art] = 0.0
                nz = np.flatnonzero(np.abs(row) > 1e-9)
                if nz.size:
                    tab.pivot(i, int(nz[0]))
    # phase two
    T[m, :] = 0.0
    T[m, :n] = c
    for i in range(m):
        if basis[i] < n:
            T[m] -= c[basis[i]] * T[i]
    tab.run(~is_art)
    x_full = np.zeros(width)
    x_full[basis] = T[:m, -1]
    x = np.maximum(x_full[:n], 0.0)
    return x, float(c @ x)



def dual_simplex_path(A, c, b0, d, ts):
    """Solve ``min c'x, A x <= b0 + t d, x >= 0`` along a sequence of ``t``.

    Requires ``c >= 0`` and ``b0 + ts[0] d >= 0``, so the all-slack basis is
    optimal at the first point. Each later point starts from the previous
    optimal basis, which stays dual feasible because only the right-hand
    side moves, and is repaired by dual simplex pivots (leaving row: most
    negative basic value, ties to the smallest index; entering column: ratio
    test with smallest-index ties). Returns an array of solutions, one row
    per ``t``.
    """
    A = np.asarray(A, dtype=float)
    c = np.asarray(c, dtype=float)
    b0 = np.asarray(b0, dtype=float)
    d = np.asarray(d, dtype=float)
    m, n = A.shape
    if (c < 0).any():
        raise ValueError("dual_simplex_path needs a non-negative cost vector")
    if (b0 + ts[0] * d < 0).any():
        raise Infeasible("slack basis is not feasible at the first point")
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[m, :n] = c
    tab = _Tableau(T, np.arange(n, n + m))
    cost = np.concatenate([c, np.zeros(m)])
    out = np.zeros((len(ts), n))
    for k, t in enumerate(ts):
        b = b0 + t * d
        T[:m, -1] = T[:m, n:n + m] @ b
        T[m, -1] = -cost[tab.basis] @ T[:m, -1]
        while True:
            vals = T[:m, -1]
            neg = np.flatnonzero(vals < -1e-10)
            if neg.size == 0:
                break
            worst = vals[neg].min()
            tied = neg[vals[neg] <= worst + 1e-12 * abs(worst)]
            r = int(tied[np.argmin(tab.basis[tied])])
            row = T[r, :-1]
            cand = np.flatnonzero(row < -_PIV_TOL)
            if cand.size == 0:
                raise Infeasible(f"no feasible point at t = {t}")
            ratios = T[m, cand] / -row[cand]
            best = ratios.min()
            col = int(cand[np.flatnonzero(ratios <= best + 1e-12 * max(1.0, best))[0]])
            tab.pivot(r, col)
        x = np.zeros(n + m)
        x[tab.basis] = np.maximum(T[:m, -1], 0.0)
        out[k] = x[:n]
    return out
