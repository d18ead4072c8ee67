"""Si(pi/2) = integral of sin(x)/x over [0, pi/2] and bounds on it.

Integrating a pointwise Oppenheim bound (1 + p cos x)/r <= sin(x)/x term by
term gives an interval for Si(pi/2) for each p.  The best interval from the
unimodal regime needs the minimiser p0 of

    U(p) = (2p + pi) / (8p (1 - p^2)),

which solves the stationarity cubic 4p^3 + 3 pi p^2 - pi = 0.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import IntegrationWarning, quad
from scipy.optimize import brentq

from .analysis import TWO_OVER_PI
from .core_bounds import HALF_PI, as_param, sinc
from .errors import BracketError, ConvergenceError, RegimeError

PI = math.pi


@dataclass(frozen=True)
class IntegralBoundSet:
    name: str
    lower: Optional[float]
    upper: Optional[float]
    provenance: str

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and not self.lower < self.upper:
            raise ValueError(f"{self.name}: lower {self.lower} >= upper {self.upper}")

    @property
    def width(self) -> float:
        if self.lower is None or self.upper is None:
            return math.inf
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        """Strict containment; a missing side is unbounded."""
        above = self.lower is None or self.lower < value
        below = self.upper is None or value < self.upper
        return above and below


def si_half_pi(tol: float = 1e-12, limit: int = 200) -> float:
    """Adaptive Gauss-Kronrod quadrature of sinc over [0, pi/2] to absolute ``tol``."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, err = quad(sinc, 0.0, HALF_PI, epsabs=tol, epsrel=0.0, limit=limit)
        except IntegrationWarning as exc:
            raise ConvergenceError(f"quadrature did not reach tol={tol}: {exc}") from None
    if err > tol:
        raise ConvergenceError(f"error estimate {err:.3e} exceeds tol={tol}")
    return value


def si_half_pi_series(terms: int = 30) -> float:
    """sum_k (-1)^k (pi/2)^(2k+1) / ((2k+1) (2k+1)!)."""
    return math.fsum((-1) ** k * HALF_PI ** (2 * k + 1) / ((2 * k + 1) * math.factorial(2 * k + 1))
                     for k in range(terms))


def oppenheim_integral_bounds(p) -> tuple[float, float]:
    """Integrated two-sided Oppenheim bound for a monotone regime.

    For p <= 1/2, (2/pi)(1 + p cos x) < sinc x <= (1 + p cos x)/(1 + p); for
    p >= 2/pi both sides swap.  Integration uses int_0^{pi/2} (1 + p cos x) dx
    = pi/2 + p.
    """
    p = as_param(p)
    if 0.5 < p < TWO_OVER_PI:
        raise RegimeError(f"p={p} is in the unimodal regime; use mid_regime_bounds")
    area = HALF_PI + p
    a, b = area * TWO_OVER_PI, area / (1 + p)
    return (a, b) if p <= 0.5 else (b, a)


def bound_set_p_half() -> IntegralBoundSet:
    """(1 + 1/pi, 2(pi + 1)/3), the reference interval at p = 1/2.

    The upper end is (pi + 2p)/(1 + p), twice the exact integral of the
    pointwise bound, which is (pi + 1)/3 (see ``oppenheim_integral_bounds``).
    It is kept because it matches the reference decimals 2.76...; being
    larger than the exact integral, it is still a valid upper bound.
    """
    p = 0.5
    lo, _ = oppenheim_integral_bounds(p)
    return IntegralBoundSet("p_half", lo, (PI + 2 * p) / (1 + p),
                            "integrated reversed Oppenheim bound, p = 1/2")


def bound_set_p_two_over_pi() -> IntegralBoundSet:
    lo, hi = oppenheim_integral_bounds(TWO_OVER_PI)
    return IntegralBoundSet("p_two_over_pi", lo, hi, "integrated Oppenheim bound, p = 2/pi")


def lower_bound_L(p) -> float:
    return min(TWO_OVER_PI, 1 / (1 + p)) * (p + HALF_PI)


def upper_bound_U(p) -> float:
    return (2 * p + PI) / (8 * p * (1 - p * p))


def stationarity_cubic(p) -> float:
    """U'(p) * (8p(1-p^2))^2 / 8; shares its sign and zeros with U'."""
    return 4 * p**3 + 3 * PI * p**2 - PI


def mid_regime_bounds(p) -> IntegralBoundSet:
    p = as_param(p)
    if not 0.5 < p < TWO_OVER_PI:
        raise RegimeError(f"p={p} outside the unimodal regime (1/2, 2/pi)")
    return IntegralBoundSet(f"mid_p={p:.6g}", lower_bound_L(p), upper_bound_U(p),
                            "integrated unimodal-regime bound")


def optimal_p0_numeric() -> float:
    lo, hi = 0.5, TWO_OVER_PI
    if not stationarity_cubic(lo) < 0 < stationarity_cubic(hi):
        raise BracketError("stationarity cubic has no sign change on (1/2, 2/pi)")
    return brentq(stationarity_cubic, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps)


def optimal_p0_closed_form() -> float:
    theta = math.atan(4 * math.sqrt(PI**2 - 4) / (PI**2 - 8)) / 3
    return PI / 4 * (math.cos(theta) + math.sqrt(3) * math.sin(theta) - 1)


def golden_section_max(f, lo: float, hi: float, max_iter: int = 200) -> float:
    """Maximiser of a unimodal ``f`` on [lo, hi]; stops when the bracket stops shrinking.

    Works on kinked maxima where parabolic steps stall.
    """
    inv_phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c, d = b - inv_phi * (b - a), a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if not a < c < d < b:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    return c if fc >= fd else d


def maximize_lower_bound(grid_points: int = 2001) -> tuple[float, float]:
    """Maximiser and maximum of L(p) over (1/2, 2/pi): grid scan, then golden section."""
    ps = np.linspace(0.5, TWO_OVER_PI, grid_points)[1:-1]
    vals = np.minimum(TWO_OVER_PI, 1 / (1 + ps)) * (ps + HALF_PI)
    i = int(np.argmax(vals))
    lo, hi = ps[max(i - 1, 0)], ps[min(i + 1, len(ps) - 1)]
    p_best = golden_section_max(lower_bound_L, float(lo), float(hi))
    return p_best, lower_bound_L(p_best)


def optimal_bound_set() -> IntegralBoundSet:
    _, lo = maximize_lower_bound()
    return IntegralBoundSet("optimal_p", lo, upper_bound_U(optimal_p0_numeric()),
                            "best integrated unimodal-regime bound")


def prior_bound_sets() -> list[IntegralBoundSet]:
    return [
        IntegralBoundSet("prior_4/3", 4 / 3, (PI + 1) / 3, "earlier two-sided bound"),
        IntegralBoundSet("prior_(pi+5)/6", (PI + 5) / 6, None, "earlier lower bound"),
    ]


def all_bound_sets() -> list[IntegralBoundSet]:
    return [bound_set_p_half(), bound_set_p_two_over_pi(), optimal_bound_set(), *prior_bound_sets()]
