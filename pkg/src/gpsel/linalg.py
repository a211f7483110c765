"""Dense least-squares primitives shared by every selector.

All fits go through a single Householder QR path (LAPACK ``geqrf`` via
``numpy.linalg.qr``). Normal equations are never formed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_triangular

from .errors import RankDeficient, ShapeMismatch

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class DesignMatrix:
    """Named predictor columns, assembled on demand into model matrices."""

    values: np.ndarray
    names: tuple[str, ...] = ()
    includes_intercept: bool = True

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if values.ndim != 2:
            raise ShapeMismatch("design must be a 2-d array")
        if values.shape[0] < 2:
            raise ShapeMismatch(f"need at least 2 rows, got {values.shape[0]}")
        names = tuple(self.names) or tuple(f"x{j + 1}" for j in range(values.shape[1]))
        if len(names) != values.shape[1]:
            raise ShapeMismatch(f"{len(names)} names for {values.shape[1]} columns")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def p(self) -> int:
        return self.values.shape[1]

    def assemble(self, columns=None, intercept: bool | None = None) -> np.ndarray:
        """Return the model matrix for the selected column indices.

        The constant column is prepended when ``intercept`` (default:
        ``includes_intercept``) is true.
        """
        if intercept is None:
            intercept = self.includes_intercept
        cols = self.values if columns is None else self.values[:, list(columns)]
        if intercept:
            return np.column_stack([np.ones(self.n), cols])
        return np.array(cols)


@dataclass(frozen=True)
class LsqFit:
    coefficients: np.ndarray
    rss: float
    fitted: np.ndarray
    rank: int
    residuals: np.ndarray = field(repr=False, default=None)


def _check_shapes(X, y):
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if X.shape[0] != y.shape[0]:
        raise ShapeMismatch(f"X has {X.shape[0]} rows but y has {y.shape[0]}")
    return X, y


def _householder(X):
    q, r = np.linalg.qr(X, mode="reduced")
    diag = np.abs(np.diag(r))
    scale = np.sqrt((X * X).sum(axis=0)).max() if X.size else 0.0
    tol = X.shape[0] * _EPS * scale
    if X.shape[1] > X.shape[0] or (diag.size and diag.min() < tol):
        raise RankDeficient(
            f"design of shape {X.shape} is rank deficient "
            f"(min |R_kk| = {diag.min() if diag.size else 0:.3g}, tol = {tol:.3g})"
        )
    return q, r


def qr_least_squares(X, y) -> LsqFit:
    """Ordinary least squares through a Householder QR factorization.

    Raises
    ------
    RankDeficient
        If a diagonal entry of R falls below ``n * eps * max_j ||x_j||``.
    """
    X, y = _check_shapes(X, y)
    if X.shape[1] == 0:
        return LsqFit(np.zeros(0), float(y @ y), np.zeros_like(y), 0, y.copy())
    q, r = _householder(X)
    qty = q.T @ y
    beta = solve_triangular(r, qty, lower=False, check_finite=False)
    fitted = X @ beta
    resid = y - fitted
    return LsqFit(beta, float(resid @ resid), fitted, X.shape[1], resid)


def projection_quadform(X, y) -> float:
    """Return y' P y where P projects onto the column span of ``X``."""
    X, y = _check_shapes(X, y)
    if X.shape[1] == 0:
        return 0.0
    q, _ = _householder(X)
    qty = q.T @ y
    return float(qty @ qty)


def center(v):
    """Return ``(v - mean(v), mean(v))``."""
    v = np.asarray(v, dtype=float)
    m = float(v.mean())
    c = v - m
    # second pass removes the rounding left by the first subtraction
    c -= c.mean()
    return c, m
