"""Model indicators, enumeration of the model space and per-model statistics.

Two conventions are tracked side by side for each model:

* the non-centred convention, where the intercept is one of the g-prior
  coefficients and the fit ratio is ``y'P y / y'y``;
* the centred (location-invariant) convention, where the intercept has a flat
  prior and the ratio is the usual coefficient of determination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankDeficient, TooManyModels
from .linalg import qr_least_squares

MAX_ENUM_P = 25
SATURATION_TOL = 1e-12


@dataclass(frozen=True, order=True)
class ModelIndicator:
    bits: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))

    @classmethod
    def from_indices(cls, p: int, indices) -> "ModelIndicator":
        idx = set(int(i) for i in indices)
        return cls(tuple(j in idx for j in range(p)))

    @classmethod
    def from_mask(cls, mask) -> "ModelIndicator":
        return cls(tuple(bool(b) for b in mask))

    @classmethod
    def null(cls, p: int) -> "ModelIndicator":
        return cls((False,) * p)

    @property
    def p(self) -> int:
        return len(self.bits)

    @property
    def p_gamma(self) -> int:
        return sum(self.bits)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.bits) if b)

    @property
    def mask(self) -> np.ndarray:
        return np.array(self.bits, dtype=bool)

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)

    def __len__(self):
        return len(self.bits)

    def issubset(self, other: "ModelIndicator") -> bool:
        return all(b <= o for b, o in zip(self.bits, other.bits))


def enumerate_models(p: int, include_null: bool = True, max_size: int | None = None,
                     n: int | None = None) -> list[ModelIndicator]:
    """All admissible indicators in binary-counting order (x1 is the low bit).

    Models with ``p_gamma + 1 > n`` are dropped when ``n`` is given.
    """
    if p > MAX_ENUM_P:
        raise TooManyModels(f"p = {p} exceeds the enumeration guard of {MAX_ENUM_P}")
    limit = p if max_size is None else min(p, max_size)
    if n is not None:
        limit = min(limit, n - 1)
    out = []
    for m in range(1 << p):
        bits = tuple(bool((m >> j) & 1) for j in range(p))
        k = sum(bits)
        if k > limit or (k == 0 and not include_null):
            continue
        out.append(ModelIndicator(bits))
    return out


@dataclass(frozen=True)
class ModelStats:
    """Sufficient statistics of one model for every g-prior score.

    ``rss / yty`` and ``rss / tss`` are kept as the exact complements of the
    two ratios; they stay accurate when the ratios are within 1e-10 of one.
    """

    p_gamma: int
    rss: float
    yty: float
    tss: float
    n: int
    coefficients: np.ndarray  # OLS with the intercept first

    @property
    def r2_uncentered(self) -> float:
        return 1.0 - self.rss / self.yty

    @property
    def r2_centered(self) -> float:
        return 0.0 if self.p_gamma == 0 else 1.0 - self.rss / self.tss

    @property
    def resid_uncentered(self) -> float:
        """``1 - r2_uncentered``."""
        return self.rss / self.yty

    @property
    def resid_centered(self) -> float:
        """``1 - r2_centered``."""
        return 1.0 if self.p_gamma == 0 else self.rss / self.tss

    @property
    def saturated_uncentered(self) -> bool:
        return self.resid_uncentered < SATURATION_TOL

    @property
    def saturated_centered(self) -> bool:
        return self.resid_centered < SATURATION_TOL


def model_stats(data, gamma: ModelIndicator) -> ModelStats:
    """Fit ``gamma`` by QR and return both fit ratios.

    ``data`` is anything with ``X`` (n, p) and ``y`` arrays.

    Raises
    ------
    RankDeficient
        If the assembled design is not of full column rank.
    """
    X = np.asarray(data.X, dtype=float)
    y = np.asarray(data.y, dtype=float)
    n = y.shape[0]
    if gamma.p_gamma + 1 > n:
        raise RankDeficient(f"model with {gamma.p_gamma} predictors needs more than {n} rows")
    design = np.column_stack([np.ones(n), X[:, gamma.mask]])
    fit = qr_least_squares(design, y)
    ybar = y.mean()
    dev = y - ybar
    tss = float(dev @ dev)
    rss = float(tss) if gamma.p_gamma == 0 else fit.rss
    return ModelStats(gamma.p_gamma, rss, float(y @ y), tss, n, fit.coefficients)


def all_model_stats(data, models=None, include_null: bool = True):
    """Statistics for every model; rank-deficient models are skipped.

    Returns ``(models, stats, skipped)``.
    """
    X = np.asarray(data.X)
    n, p = X.shape
    if models is None:
        models = enumerate_models(p, include_null=include_null, n=n)
    kept, stats, skipped = [], [], []
    for gamma in models:
        try:
            stats.append(model_stats(data, gamma))
            kept.append(gamma)
        except RankDeficient:
            skipped.append(gamma)
    return kept, stats, skipped
