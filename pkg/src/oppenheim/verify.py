"""Grid certification of inequalities and monotonicity claims.

These checks sample a claim at finitely many points and report the worst
margin found.  A pass means "verified on grid", which is evidence and not an
interval-arithmetic proof.

Checked functions must accept a numpy array of abscissae and return an array
of the same shape; non-vectorised callables are tolerated but slow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .analysis import ConstantPair, Source, f_p
from .core_bounds import HALF_PI, as_param
from .errors import EvaluationError, PreconditionError

EPS = np.finfo(float).eps
DEFAULT_TOL = 4 * EPS
DEFAULT_POINTS = 100_000

CSV_HEADER = "name,passed,worst_x,worst_margin,points,tolerance"


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [lo, hi]; an open end is excluded by insetting half a step."""

    lo: float
    hi: float
    points: int = DEFAULT_POINTS
    open_lo: bool = False
    open_hi: bool = False

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.points < 2:
            raise ValueError("a grid needs at least 2 points")

    @property
    def step(self) -> float:
        gaps = self.points - 1 + 0.5 * self.open_lo + 0.5 * self.open_hi
        return (self.hi - self.lo) / gaps

    def nodes(self) -> np.ndarray:
        start = self.lo + 0.5 * self.step if self.open_lo else self.lo
        xs = start + self.step * np.arange(self.points)
        if not self.open_hi:
            xs[-1] = self.hi
        # keep rounding from pushing a node past a closed end
        return np.clip(xs, self.lo, self.hi)

    def refined(self, factor: int = 2) -> "GridSpec":
        return replace(self, points=self.points * factor)


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    worst_x: float
    worst_margin: float
    grid: Optional[GridSpec]
    tolerance: float

    def csv_row(self) -> str:
        points = self.grid.points if self.grid is not None else 1
        return ",".join([
            _csv_field(self.name), "true" if self.passed else "false",
            _fmt(self.worst_x), _fmt(self.worst_margin), str(points), _fmt(self.tolerance),
        ])

    def plain(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}  {self.name}  worst_margin={_fmt(self.worst_margin)} "
                f"at x={_fmt(self.worst_x)}")


def _fmt(v: float) -> str:
    return repr(float(v))


def _csv_field(s: str) -> str:
    if any(ch in s for ch in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def evaluate(f: Callable, xs: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on ``xs``, pinning any failure or non-finite value to its x."""
    try:
        vals = np.broadcast_to(np.asarray(f(xs), dtype=float), xs.shape)
    except Exception:
        vals = np.empty_like(xs)
        for i, x in enumerate(xs):
            try:
                vals[i] = float(f(x))
            except Exception as exc:
                raise EvaluationError(float(x), exc) from exc
    bad = ~np.isfinite(vals)
    if bad.any():
        x = float(xs[np.argmax(bad)])
        raise EvaluationError(x, ValueError(f"non-finite value {vals[np.argmax(bad)]}"))
    return vals


def check_inequality(lhs: Callable, rhs: Callable, grid: GridSpec, strict: bool = False,
                     tol: float = DEFAULT_TOL, name: str = "inequality",
                     margin: Optional[Callable] = None) -> CheckReport:
    """Check lhs(x) <= rhs(x) (or < when ``strict``) at every grid node.

    Margins are relative: (rhs - lhs) / max(|lhs|, |rhs|).  Non-strict claims
    pass when every margin is >= -tol.  Strict claims need a positive margin
    at interior nodes; closed endpoints keep the non-strict rule, since strict
    inequalities often degenerate to equality there.

    ``margin``, if given, computes rhs - lhs directly; supply it when the two
    sides agree to high order and plain subtraction would leave only noise.
    """
    xs = grid.nodes()
    lv, rv = evaluate(lhs, xs), evaluate(rhs, xs)
    raw = evaluate(margin, xs) if margin is not None else rv - lv
    scale = np.maximum(np.abs(lv), np.abs(rv))
    rel = np.where(scale > 0, raw / np.where(scale > 0, scale, 1.0), raw)
    ok = rel >= -tol
    if strict:
        interior = (xs > grid.lo) & (xs < grid.hi)
        ok = np.where(interior, rel > 0, ok)
    passed = bool(ok.all())
    idx = int(np.argmin(rel)) if passed else int(np.argmin(ok))
    return CheckReport(name, passed, float(xs[idx]), float(rel[idx]), grid,
                       0.0 if strict else tol)


def check_monotone(f: Callable, grid: GridSpec, direction: str = "increasing",
                   name: str = "monotone") -> CheckReport:
    """Strict ordering of consecutive grid values; margin is the smallest signed step."""
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be 'increasing' or 'decreasing', not {direction!r}")
    xs = grid.nodes()
    d = np.diff(evaluate(f, xs))
    if direction == "decreasing":
        d = -d
    i = int(np.argmin(d))
    return CheckReport(name, bool(d[i] > 0), float(xs[i]), float(d[i]), grid, 0.0)


def check_unimodal_max(f: Callable, grid: GridSpec, name: str = "unimodal") -> CheckReport:
    """Consecutive differences must go + ... + - ... - with exactly one sign change.

    ``worst_x`` is the grid node where the maximum sits; ``worst_margin`` is the
    smallest step in the expected direction (0 when there is no interior turn).
    """
    xs = grid.nodes()
    vals = evaluate(f, xs)
    k = int(np.argmax(vals))
    if k == 0 or k == len(xs) - 1:
        return CheckReport(name, False, float(xs[k]), 0.0, grid, 0.0)
    d = np.diff(vals)
    signed = np.concatenate([d[:k], -d[k:]])
    worst = float(signed.min())
    return CheckReport(name, worst > 0, float(xs[k]), worst, grid, 0.0)


def check_sign_agreement(f: Callable, g: Callable, grid: GridSpec,
                         name: str = "sign agreement") -> CheckReport:
    """sign(f(x)) == sign(g(x)) at every node; margin is +1 if so, -1 otherwise."""
    xs = grid.nodes()
    agree = np.sign(evaluate(f, xs)) == np.sign(evaluate(g, xs))
    idx = int(np.argmin(agree))
    return CheckReport(name, bool(agree.all()), float(xs[idx]), 1.0 if agree.all() else -1.0,
                       grid, 0.0)


def lhospital_monotone_check(f1: Callable, f2: Callable, d1: Callable, d2: Callable,
                             grid: GridSpec, tol: float = DEFAULT_TOL,
                             anchor_tol: float = 1e-12,
                             name: str = "monotone l'Hopital rule") -> CheckReport:
    """Check one instance of the monotone form of l'Hopital's rule.

    With f1(a) = f2(a) = 0 at a = grid.lo, both the hypothesis (d1/d2
    increasing) and the conclusion (f1/f2 increasing) must hold on the grid.
    Both comparisons are non-strict, so a constant ratio passes.
    """
    a = np.array([grid.lo])
    anchor = max(abs(evaluate(f1, a)[0]), abs(evaluate(f2, a)[0]))
    if anchor > anchor_tol:
        raise PreconditionError(f"f1, f2 must vanish at {grid.lo}; got |f| = {anchor:.3e}")
    xs = grid.nodes()
    worst_x, worst = float(xs[0]), math.inf
    for num, den in ((d1, d2), (f1, f2)):
        ratio = evaluate(num, xs) / evaluate(den, xs)
        steps = np.diff(ratio) / np.maximum(np.abs(ratio[1:]), 1.0)
        i = int(np.argmin(steps))
        if steps[i] < worst:
            worst_x, worst = float(xs[i]), float(steps[i])
    return CheckReport(name, worst >= -tol, worst_x, worst, grid, tol)


def brute_force_constants(p, points: int = 1_000_000) -> ConstantPair:
    """(1/max f_p, 1/min f_p) over a uniform grid of (0, pi/2] plus the limit at 0."""
    p = as_param(p)
    if points < 1000:
        raise ValueError("brute force needs at least 1000 points")
    xs = np.linspace(0.0, HALF_PI, points + 1)[1:]
    vals = f_p(xs, p)
    at_zero = 1.0 / (1.0 + p)
    hi, lo = max(vals.max(), at_zero), min(vals.min(), at_zero)
    return ConstantPair(float(1 / hi), float(1 / lo), Source.NUMERIC_OPT, Source.NUMERIC_OPT)


def scalar_check(name: str, margin: float, tol: float = 0.0, x: float = math.nan) -> CheckReport:
    """Report for a single-number claim ``margin >= -tol``."""
    return CheckReport(name, bool(margin >= -tol), x, float(margin), None, tol)


def as_probe(report: CheckReport) -> CheckReport:
    """Invert a check whose failure is the expected outcome (a sharpness probe)."""
    return replace(report, name=f"probe: {report.name} fails", passed=not report.passed)
