"""Gaussian hypergeometric function and g-integral quadrature.

``log_hyp2f1`` works in log space throughout: the model-posterior regime has
``a = n/2`` up to a few hundred and arguments that can sit within 1e-10 of 1,
where the raw power series both overflows and needs millions of terms.

Evaluation routes
-----------------
* ``x <= 0.5`` or a cheap series: direct power series, accumulated as
  log-terms and summed with a log-sum-exp.
* ``x > 0.5`` with ``c > a`` and ``c > b``, no closed route: Euler transform
  ``2F1(a,b;c;x) = (1-x)^(c-a-b) 2F1(c-a,c-b;c;x)`` (all terms positive).
* ``x > 0.5``, ``b = 1``, ``a + 1 - c > 0``: the 1-x connection formula
  collapses to a closed form plus a rapidly convergent series in ``1-x``::

      2F1(a,1;c;x) = G(c)G(a+1-c)/G(a) x^(1-c) (1-x)^(c-a-1)
                     - (c-1)/(a+1-c) 2F1(a,1;a-c+2;1-x)

* ``b = 2``: contiguous relation
  ``(1-x) 2F1(a,2;c;x) = (c-1) + (2-c+(a-1)x) 2F1(a,1;c;x)``.
* anything still unconverged within the term budget (slow series with ``x``
  close to 1) goes to ``mpmath.hyp2f1`` at 30 digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np
from scipy import integrate

from .errors import DivergentIntegral, DomainError, NoConvergence, QuadratureFailure

MAX_TERMS = 10_000
_CHUNK = 512
# e^-37 < 1e-16: a term this far below the running log-sum no longer moves it
_LOG_TERM_TOL = 37.0


@dataclass(frozen=True)
class Hyp2f1Params:
    a: float
    b: float
    c: float
    x: float
    xc: float | None = None  # 1 - x, when known more accurately than x itself

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and self.c > 0):
            raise DomainError(f"parameters must be positive: a={self.a}, b={self.b}, c={self.c}")
        if not (0.0 <= self.x < 1.0):
            raise DomainError(f"argument must lie in [0, 1), got {self.x!r}")
        if self.xc is not None and not (0.0 < self.xc <= 1.0):
            raise DomainError(f"complement 1-x must lie in (0, 1], got {self.xc!r}")

    @property
    def one_minus_x(self) -> float:
        return self.xc if self.xc is not None else 1.0 - self.x


def _log_series(a, b, c, x, max_terms=MAX_TERMS):
    """ln of sum_k (a)_k (b)_k / ((c)_k k!) x^k for positive parameters."""
    if x == 0.0:
        return 0.0
    lx = math.log(x)
    anchor = 0.0  # log of the first term of the current chunk
    best = 0.0
    chunks = []
    k0 = 0
    while True:
        k = np.arange(k0, k0 + _CHUNK, dtype=float)
        step = np.log((a + k) * (b + k) / ((c + k) * (k + 1.0))) + lx
        logs = np.empty(_CHUNK)
        logs[0] = anchor
        np.cumsum(step[:-1], out=logs[1:])
        logs[1:] += anchor
        anchor = logs[-1] + step[-1]
        chunks.append(logs)
        best = max(best, float(logs.max()))
        total = best + math.log(sum(float(np.exp(ch - best).sum()) for ch in chunks))
        if step[-1] < 0 and logs[-1] < total - _LOG_TERM_TOL:
            return total
        k0 += _CHUNK
        if k0 >= max_terms:
            raise NoConvergence(
                f"2F1({a}, {b}; {c}; {x}) series did not converge in {max_terms} terms"
            )


def _log_b1_connection(a, c, x, xc):
    lead = (
        math.lgamma(c) + math.lgamma(a + 1.0 - c) - math.lgamma(a)
        + (1.0 - c) * math.log(x) + (c - a - 1.0) * math.log(xc)
    )
    if c == 1.0:
        return lead
    coef = (c - 1.0) / (a + 1.0 - c)
    corr = math.log(abs(coef)) + _log_series(a, 1.0, a - c + 2.0, xc)
    ratio = math.exp(corr - lead)
    if coef > 0 and ratio > 0.5:
        # too much cancellation; caller falls back to the direct series
        return None
    return lead + math.log1p(-ratio if coef > 0 else ratio)


def _log_hyp2f1(a, b, c, x, xc):
    if x == 0.0:
        return 0.0
    if b > a:
        a, b = b, a
    if b == c:
        return -a * math.log(xc)
    if a == c:
        return -b * math.log(xc)
    if x <= 0.5:
        return _log_series(a, b, c, x)
    if b == 1.0 and a + 1.0 - c > 0:
        val = _log_b1_connection(a, c, x, xc)
        if val is not None:
            return val
    if b == 2.0 and c > 1.0 and a + 2.0 - c > 0:
        slope = 2.0 - c + (a - 1.0) * x
        if slope > 0:
            lf = _log_hyp2f1(a, 1.0, c, x, xc)
            return np.logaddexp(math.log(c - 1.0), math.log(slope) + lf) - math.log(xc)
    try:
        if c > a and c > b:
            return (c - a - b) * math.log(xc) + _log_series(c - a, c - b, c, x)
        return _log_series(a, b, c, x)
    except NoConvergence:
        return _log_mp(a, b, c, x, xc)


def _log_mp(a, b, c, x, xc):
    # last resort near x = 1: mpmath continues 2F1 analytically around x = 1
    with mpmath.workdps(30):
        xm = 1 - mpmath.mpf(xc) if xc < 0.25 else mpmath.mpf(x)
        return float(mpmath.log(mpmath.hyp2f1(a, b, c, xm)))


def log_hyp2f1(a, b=None, c=None, x=None, *, xc=None) -> float:
    """Natural log of the Gauss hypergeometric function 2F1(a, b; c; x).

    Accepts either a :class:`Hyp2f1Params` or the four scalars. ``xc``
    optionally supplies ``1 - x`` computed without cancellation, which
    matters when ``x`` is within a few ulps of 1.

    Raises
    ------
    DomainError
        If ``x`` is outside ``[0, 1)`` or a parameter is not positive.
    NoConvergence
        If no evaluation route reaches tolerance within the term budget.
    """
    params = a if isinstance(a, Hyp2f1Params) else Hyp2f1Params(a, b, c, x, xc)
    return float(_log_hyp2f1(float(params.a), float(params.b), float(params.c),
                             float(params.x), float(params.one_minus_x)))


def hyp2f1(a, b, c, x) -> float:
    return math.exp(log_hyp2f1(a, b, c, x))


def _log_quad(log_f, lo, hi, rel_tol=1e-10):
    """ln of int_lo^hi exp(log_f(t)) dt, rescaled so the integrand peaks at 1.

    ``log_f`` must accept arrays as well as scalars.
    """
    grid = np.linspace(lo, hi, 2049)[1:-1]
    vals = log_f(grid)
    peak_at = grid[int(np.argmax(vals))]
    shift = float(vals.max())
    value, err = integrate.quad(
        lambda t: math.exp(float(log_f(t)) - shift), lo, hi,
        points=[peak_at], epsabs=0.0, epsrel=rel_tol, limit=500,
    )
    if not value > 0 or err > 1e3 * rel_tol * value:
        raise QuadratureFailure(f"quadrature error estimate {err:.3g} for value {value:.3g}")
    return shift + math.log(value)


def g_integral_oracle(n, p_gamma, r2, prior_exponent=0.0, *, shrink_power=0, r2c=None) -> float:
    """ln int_0^inf (1+g)^(n/2-(p+1)/2-1+e) (1+g(1-r2))^(-n/2) (g/(1+g))^k dg.

    Independent adaptive Gauss-Kronrod evaluation after the substitution
    ``t = g/(1+g)``; serves as the check on every 2F1 closed form.
    ``prior_exponent`` is ``e`` and ``shrink_power`` is ``k``. ``r2c``
    optionally gives ``1 - r2`` exactly.

    Raises
    ------
    DivergentIntegral
        If the tail exponent makes the integral infinite.
    """
    r2 = float(r2)
    if not 0.0 <= r2 < 1.0:
        raise DomainError(f"r2 must lie in [0, 1), got {r2}")
    if prior_exponent >= (p_gamma + 1) / 2.0:
        raise DivergentIntegral(
            f"integrand ~ g^({prior_exponent - (p_gamma + 1) / 2.0 - 1:.3g}) is not integrable at infinity"
        )
    # in t, the integrand is (1-t)^alpha (1 - r2 t)^(-n/2) t^k
    alpha = (p_gamma + 1) / 2.0 - 1.0 - prior_exponent
    s = 1.0 - r2 if r2c is None else float(r2c)

    def log_f(t):
        # 1 - r2 t written as s + r2 (1 - t) to keep precision near t = 1
        val = alpha * np.log1p(-t) - 0.5 * n * np.log(s + r2 * (1.0 - t))
        if shrink_power:
            val = val + shrink_power * np.log(t)
        return val

    return _log_quad(log_f, 0.0, 1.0)
