"""Monotonicity structure of f_p(x) = sin x / (x (1 + p cos x)) and best constants.

The greatest q and least r with

    q sin x / (1 + p cos x) <= x <= r sin x / (1 + p cos x),   0 <= x <= pi/2,

are q = 1 / sup f_p and r = 1 / inf f_p.  The sign of f_p' is the sign of
p - h(x), where h increases from 1/2 to 2/pi, which splits p > 0 into a
decreasing, a unimodal and an increasing regime.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from . import _series
from .core_bounds import HALF_PI, as_param, as_radians, sinc
from .errors import BracketError, DomainError, RegimeError

TWO_OVER_PI = 2 / np.pi
PI_HALF_MINUS_ONE = np.pi / 2 - 1
ROOT_TOL = 1e-14


class Regime(enum.Enum):
    LOW = "LOW"
    MID_A = "MID_A"
    MID_B = "MID_B"
    HIGH = "HIGH"

    @property
    def boundaries(self) -> tuple[float, float]:
        """Half-open p-interval [lo, hi) covered by this regime (LOW is open at 0)."""
        return {
            Regime.LOW: (0.0, 0.5),
            Regime.MID_A: (0.5, PI_HALF_MINUS_ONE),
            Regime.MID_B: (PI_HALF_MINUS_ONE, TWO_OVER_PI),
            Regime.HIGH: (TWO_OVER_PI, np.inf),
        }[self]


class Source(enum.Enum):
    PAPER_FORMULA = "PAPER_FORMULA"
    NUMERIC_OPT = "NUMERIC_OPT"


@dataclass(frozen=True)
class ConstantPair:
    q: float
    r: float
    q_source: Source
    r_source: Source

    def __post_init__(self):
        if not 0 < self.q <= self.r:
            raise ValueError(f"expected 0 < q <= r, got q={self.q}, r={self.r}")


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    target: str

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")


def _split(x, small_fn, big_fn):
    """Apply ``small_fn`` below the series cutoff and ``big_fn`` above it."""
    small = x < _series.SERIES_CUTOFF
    out = np.where(small, small_fn(np.where(small, x, 0.0)), big_fn(np.where(small, 1.0, x)))
    return out[()] if isinstance(out, np.ndarray) else out


def sin_minus_xcos(x):
    """sin x - x cos x (the numerator of h)."""
    x = as_radians(x)
    return _split(x, _series.sin_minus_xcos, lambda v: np.sin(v) - v * np.cos(v))


def x_minus_sincos(x):
    """x - sin x cos x (the denominator of h)."""
    x = as_radians(x)
    return _split(x, _series.x_minus_sincos, lambda v: v - np.sin(v) * np.cos(v))


def f_p(x, p):
    """sin x / (x (1 + p cos x)); equals 1/(1+p) at x = 0."""
    x = as_radians(x)
    p = as_param(p)
    return sinc(x) / (1.0 + p * np.cos(x))


def f_p_excess(x, p):
    """f_p(x) - 1/(1+p), computed without cancellation near x = 0.

    f_p is flat to O(x^2) at the origin (to O(x^4) when p = 1/2), so
    consecutive values on a fine grid round to the same double.  Monotonicity
    checks look at this shifted function instead.
    """
    x = as_radians(x)
    p = as_param(p)

    def small(v):
        safe = np.where(v == 0.0, 1.0, v)
        gap = _series.weighted_sinc_gap(v, p) / safe
        return gap / ((1.0 + p * np.cos(v)) * (1.0 + p))

    return _split(x, small, lambda v: f_p(v, p) - 1.0 / (1.0 + p))


def h(x):
    """(sin x - x cos x) / (x - sin x cos x), increasing from 1/2 to 2/pi."""
    x = as_radians(x)
    safe = np.where(x == 0.0, 1.0, x)
    out = np.where(x == 0.0, 0.5, sin_minus_xcos(safe) / x_minus_sincos(safe))
    out = np.where(x == HALF_PI, TWO_OVER_PI, out)
    return out[()]


def f_p_prime(x, p):
    """Closed-form derivative (x - sin x cos x)(p - h(x)) / (p x cos x + x)^2."""
    x = as_radians(x)
    p = as_param(p)
    if np.any(x == 0.0):
        raise DomainError("f_p' in factored form is 0/0 at x = 0")
    return x_minus_sincos(x) * (p - h(x)) / (p * x * np.cos(x) + x) ** 2


def g(x):
    """2x^2 + x sin 2x + 2 cos 2x - 2 (vanishes to sixth order at 0)."""
    x = as_radians(x)
    return _split(x, _series.g,
                  lambda v: 2 * v * v + v * np.sin(2 * v) + 2 * np.cos(2 * v) - 2)


def g_prime(x):
    """2x cos 2x + 4x - 3 sin 2x."""
    x = as_radians(x)
    return _split(x, _series.g_prime,
                  lambda v: 2 * v * np.cos(2 * v) + 4 * v - 3 * np.sin(2 * v))


def g_second(x):
    """8 (tan x - x) sin x cos x, evaluated as 8 sin x (sin x - x cos x).

    The two forms agree on (0, pi/2); the second has no tan pole at pi/2.
    """
    x = as_radians(x)
    out = 8.0 * np.sin(x) * sin_minus_xcos(x)
    return out[()] if isinstance(out, np.ndarray) else out


def h_prime(x):
    """2 g(x) sin x / (2x - sin 2x)^2, for x in (0, pi/2]."""
    x = as_radians(x)
    return 2 * g(x) * np.sin(x) / (2 * x_minus_sincos(x)) ** 2


def classify(p) -> Regime:
    p = as_param(p)
    if p < 0.5:
        return Regime.LOW
    if p < PI_HALF_MINUS_ONE:
        return Regime.MID_A
    if p < TWO_OVER_PI:
        return Regime.MID_B
    return Regime.HIGH


def critical_bracket(p) -> Bracket:
    p = as_param(p)
    if not 0.5 < p < TWO_OVER_PI:
        raise RegimeError(f"f_p has no interior critical point for p={p}")
    lo, hi = 0.0, HALF_PI
    if not (h(lo) - p < 0 < h(hi) - p):
        raise BracketError(f"h - {p} does not change sign on [0, pi/2]")
    return Bracket(lo, hi, target=f"h(x) - {p!r}")


def critical_point(p) -> float:
    """The unique x* in (0, pi/2) with h(x*) = p, i.e. the maximiser of f_p."""
    br = critical_bracket(p)
    p = float(p)
    x = brentq(lambda v: h(v) - p, br.lo, br.hi, xtol=1e-300, rtol=4 * np.finfo(float).eps,
               maxiter=500)
    if abs(h(x) - p) > ROOT_TOL:
        raise BracketError(f"root refinement stalled: |h(x*) - p| = {abs(h(x) - p):.3e}")
    return x


def paper_constants(p) -> ConstantPair:
    """(q, r) by the four-case closed-form answer."""
    regime = classify(p)
    p = float(p)
    q = {
        Regime.LOW: p + 1,
        Regime.MID_A: 4 * p * (1 - p * p),
        Regime.MID_B: 4 * p * (1 - p * p),
        Regime.HIGH: np.pi / 2,
    }[regime]
    r = np.pi / 2 if regime in (Regime.LOW, Regime.MID_A) else p + 1
    return ConstantPair(q, r, Source.PAPER_FORMULA, Source.PAPER_FORMULA)


def numeric_constants(p) -> ConstantPair:
    """q = 1/sup f_p and r = 1/inf f_p over (0, pi/2].

    The extremes sit at the endpoints (limits 1/(1+p) at 0, 2/pi at pi/2)
    except for 1/2 < p < 2/pi, where the sup is f_p at the critical point.
    """
    p = as_param(p)
    if p >= TWO_OVER_PI:
        q, r = np.pi / 2, 1 + p
    elif p <= 0.5:
        q, r = 1 + p, np.pi / 2
    else:
        q = 1.0 / f_p(critical_point(p), p)
        r = max(np.pi / 2, 1 + p)
    return ConstantPair(float(q), float(r), Source.NUMERIC_OPT, Source.NUMERIC_OPT)


def cusa_triple_holds(t) -> bool:
    """Whether c sin x / (a + b cos x) < x really holds on all of (0, pi/2).

    The condition 2b <= c <= a + b alone does not guarantee it: dividing by a
    gives the Oppenheim lower bound with p = b/a, q = c/a, which needs
    q <= optimal q(p).  When p > 1/2 that is stricter than q <= 1 + p; e.g.
    (1, 1, 2) gives 2 tan(x/2) > x.  In the unimodal regime equality touches
    at the interior critical point, so it must be strict there.
    """
    p, q = t.b / t.a, t.c / t.a
    best = numeric_constants(p).q
    if 0.5 < p < TWO_OVER_PI:
        return q < best
    return q <= best
