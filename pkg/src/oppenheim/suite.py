"""The standard verification suite: every claim as a named CheckReport.

``standard_suite`` is what ``oppenheim verify`` runs.  Sharpness probes are
optional because their expected outcome is a violation; ``as_probe`` turns
that into a passing report.
"""

from __future__ import annotations

import math

import numpy as np

from . import analysis as an
from . import arcsin_bounds as ab
from . import core_bounds as cb
from . import quadrature as qd
from .verify import (CheckReport, DEFAULT_POINTS, GridSpec, as_probe, brute_force_constants,
                     check_inequality, check_monotone, check_sign_agreement, check_unimodal_max,
                     lhospital_monotone_check, scalar_check)

PI = math.pi
HALF_PI = cb.HALF_PI

INCREASING_P = (an.TWO_OVER_PI, 0.7, 1.0, 3.0)
DECREASING_P = (0.1, 0.3, 0.5)
UNIMODAL_P = (0.52, 0.55, 0.6, 0.63)
SIGN_CHAIN_P = (0.3, 0.55, 1.0)
# all satisfy b/a <= 1/2, where 2b <= c <= a + b is enough for the strict bound
CUSA_TRIPLES = (cb.CusaTriple(2, 1, 3), cb.CusaTriple(2, 1, 2), cb.CusaTriple(3, 1, 2),
                cb.CusaTriple(5, 2, 7), cb.CusaTriple(4, 1, 3.5))
# meets 2b <= c <= a + b, yet 2 sin x/(1 + cos x) = 2 tan(x/2) > x throughout
CUSA_COUNTEREXAMPLE = cb.CusaTriple(1, 1, 2)


def p_sweep() -> np.ndarray:
    """50 values of p in [0.05, 3] covering all four regimes and their cutoffs."""
    boundaries = [0.5, an.PI_HALF_MINUS_ONE, an.TWO_OVER_PI]
    mids = np.linspace(0.5, an.TWO_OVER_PI, 14)[1:-1]
    spread = np.geomspace(0.05, 3.0, 35)
    return np.unique(np.concatenate([spread, mids, boundaries]))


def _const(c):
    return lambda x: np.full_like(np.asarray(x, dtype=float), c)


def _identity(x):
    return np.asarray(x, dtype=float)


def central_difference(f, x, step=1e-3):
    """Fourth-order central difference f'(x)."""
    return (-f(x + 2 * step) + 8 * f(x + step) - 8 * f(x - step) + f(x - 2 * step)) / (12 * step)


def _fd_step(x):
    # keeps x - step inside the domain for the smallest grid nodes
    return np.minimum(1e-5, np.asarray(x) / 4)


def h_prime_fd(x):
    x = np.asarray(x, dtype=float)
    s = _fd_step(x)
    upper = np.minimum(x + s, HALF_PI)
    return (an.h(upper) - an.h(x - s)) / (upper - (x - s))


def check_oppenheim(p: float, q: float, r: float, points: int, label: str) -> list[CheckReport]:
    """q sin x/(1 + p cos x) <= x <= r sin x/(1 + p cos x) on [0, pi/2]."""
    grid = GridSpec(0.0, HALF_PI, points)
    return [
        check_inequality(lambda x: cb.oppenheim_bound(x, p, q), _identity, grid,
                         name=f"{label} lower p={p:.6g} q={q:.10g}"),
        check_inequality(_identity, lambda x: cb.oppenheim_bound(x, p, r), grid,
                         name=f"{label} upper p={p:.6g} r={r:.10g}"),
    ]


def cusa_checks(points: int) -> list[CheckReport]:
    closed = GridSpec(0.0, HALF_PI, points, open_lo=True)
    open_ = GridSpec(0.0, HALF_PI, points, open_lo=True, open_hi=True)
    reports = [
        check_inequality(cb.cusa_lower_simple, cb.sinc, closed,
                         name="sin x/x >= (1 + cos x)/2 on (0, pi/2]"),
        check_inequality(cb.cusa_lower_refined, cb.sinc, closed,
                         name="sin x/x >= (1 + 2cos x)/3 + x sin x/6 on (0, pi/2]"),
        check_inequality(_identity, lambda x: cb.oppenheim_bound(x, 1.0, 2.0),
                         GridSpec(0.0, HALF_PI, points),
                         name="2 sin x/(1 + cos x) >= x on [0, pi/2]"),
    ]
    for t in CUSA_TRIPLES:
        reports.append(check_inequality(
            lambda x, t=t: cb.cusa_general(x, t), _identity, open_, strict=True,
            margin=lambda x, t=t: cb.cusa_general_gap(x, t),
            name=f"{t.c:g} sin x/({t.a:g} + {t.b:g} cos x) < x on (0, pi/2)"))
    t = CUSA_COUNTEREXAMPLE
    reports.append(as_probe(check_inequality(
        lambda x: cb.cusa_general(x, t), _identity, open_, strict=True,
        margin=lambda x: cb.cusa_general_gap(x, t),
        name="2 sin x/(1 + cos x) < x (a = b = 1, c = 2 meets 2b <= c <= a + b)")))
    for p in (0.1, 0.25, 0.5):
        reports += check_oppenheim(p, p + 1, PI / 2, points, "small-p table bound")
    return reports


def oppenheim_checks(points: int, brute_points: int) -> list[CheckReport]:
    reports = []
    # grid-max error of a smooth peak is <= max|f''| step^2 / 8, and |f_p''| < 1 here
    oracle_tol = max(1e-8, 4 * (HALF_PI / brute_points) ** 2)
    for p in p_sweep():
        p = float(p)
        paper = an.paper_constants(p)
        numeric = an.numeric_constants(p)
        reports += check_oppenheim(p, paper.q, paper.r, points, "closed-form constants")
        brute = brute_force_constants(p, brute_points)
        gap = max(abs(numeric.q - brute.q), abs(numeric.r - brute.r))
        reports.append(scalar_check(f"numeric vs brute-force constants p={p:.6g}",
                                    oracle_tol - gap))
        reports.append(scalar_check(f"closed-form q <= optimal q p={p:.6g}",
                                    numeric.q - paper.q, tol=1e-12))
        reports.append(scalar_check(f"closed-form r >= optimal r p={p:.6g}",
                                    paper.r - numeric.r, tol=1e-12))
    return reports


def theorem_checks(points: int) -> list[CheckReport]:
    open_ = GridSpec(0.0, HALF_PI, points, open_lo=True, open_hi=True)
    half_open = GridSpec(0.0, HALF_PI, points, open_lo=True)
    reports = []
    for p in INCREASING_P:
        reports.append(check_monotone(lambda x, p=p: an.f_p_excess(x, p), half_open,
                                      "increasing", name=f"f_p increasing p={p:.6g}"))
    for p in DECREASING_P:
        reports.append(check_monotone(lambda x, p=p: an.f_p_excess(x, p), half_open,
                                      "decreasing", name=f"f_p decreasing p={p:.6g}"))
    for p in UNIMODAL_P:
        rep = check_unimodal_max(lambda x, p=p: an.f_p(x, p), half_open,
                                 name=f"f_p unimodal p={p:.6g}")
        reports.append(rep)
        off = abs(rep.worst_x - an.critical_point(p)) / half_open.step
        reports.append(scalar_check(f"grid maximum near critical point p={p:.6g}", 2.0 - off,
                                    x=rep.worst_x))
    zero = _const(0.0)
    reports += [
        check_inequality(zero, an.g_second, open_, strict=True, name="g'' > 0 on (0, pi/2)"),
        check_inequality(zero, an.g_prime, open_, strict=True, name="g' > 0 on (0, pi/2)"),
        check_inequality(zero, an.g, open_, strict=True, name="g > 0 on (0, pi/2)"),
        check_inequality(zero, h_prime_fd, open_, strict=True,
                         name="h' > 0 on (0, pi/2) by finite differences"),
        check_monotone(an.h, open_, "increasing", name="h increasing on (0, pi/2)"),
    ]
    for p in SIGN_CHAIN_P:
        reports.append(check_sign_agreement(lambda x, p=p: an.f_p_prime(x, p),
                                            lambda x, p=p: p - an.h(x), open_,
                                            name=f"sign f_p' = sign(p - h) p={p:.6g}"))
    rng = np.random.default_rng(20240601)
    xs = rng.uniform(1e-3, HALF_PI - 1e-3, 200)
    ps = rng.uniform(0.05, 3.0, 200)
    exact = np.array([an.f_p_prime(x, p) for x, p in zip(xs, ps)])
    fd = np.array([central_difference(lambda v, p=p: an.f_p(np.clip(v, 0, HALF_PI), p), x,
                                      step=min(1e-3, x / 3, (HALF_PI - x) / 3))
                   for x, p in zip(xs, ps)])
    rel = np.abs(exact - fd) / np.maximum(np.abs(exact), np.abs(fd))
    reports.append(scalar_check("f_p' matches central differences at 200 random points",
                                1e-6 - rel.max(), x=float(xs[np.argmax(rel)])))
    reports += [
        scalar_check("h(1e-6) -> 1/2", 1e-9 - abs(an.h(1e-6) - 0.5)),
        scalar_check("h(pi/2) = 2/pi", -abs(an.h(HALF_PI) - 2 / PI)),
        *(scalar_check(f"f_p(1e-8) -> 1/(1+p) p={p:g}", 1e-12 - abs(an.f_p(1e-8, p) - 1 / (1 + p)))
          for p in (0.3, 1.0)),
        scalar_check("f_p(pi/2) = 2/pi", 4 * np.finfo(float).eps - abs(an.f_p(HALF_PI, 1.0) - 2 / PI)),
    ]
    return reports


def sharpness_probes(points: int) -> list[CheckReport]:
    grid = GridSpec(0.0, HALF_PI, points)
    p = 1.0
    probes = [
        check_inequality(_identity, lambda x: cb.oppenheim_bound(x, p, 2.0 - 1e-4), grid,
                         name="upper bound with r = 2 - 1e-4 at p = 1"),
        check_inequality(lambda x: cb.oppenheim_bound(x, p, PI / 2 + 1e-4), _identity, grid,
                         name="lower bound with q = pi/2 + 1e-4 at p = 1"),
    ]
    for p in (0.3, 0.55, 0.6):
        c = an.numeric_constants(p)
        probes += [
            check_inequality(lambda x, p=p, q=c.q: cb.oppenheim_bound(x, p, q + 1e-6), _identity,
                             grid, name=f"lower bound with optimal q + 1e-6 at p={p:g}"),
            check_inequality(_identity, lambda x, p=p, r=c.r: cb.oppenheim_bound(x, p, r - 1e-6),
                             grid, name=f"upper bound with optimal r - 1e-6 at p={p:g}"),
        ]
    return [as_probe(r) for r in probes]


def _starts_with(value: float, digits: str) -> bool:
    """Truncated decimal match: 1.3707 starts with '1.37'."""
    places = len(digits.split(".")[1])
    return math.floor(value * 10**places) == int(digits.replace(".", ""))


def quadrature_checks(tol: float = 1e-12) -> list[CheckReport]:
    si = qd.si_half_pi(tol)
    series = qd.si_half_pi_series()
    sets = {s.name: s for s in qd.all_bound_sets()}
    reports = [scalar_check("Si(pi/2): quadrature vs alternating series", tol - abs(si - series))]
    for s in sets.values():
        margin = min(si - (s.lower if s.lower is not None else -math.inf),
                     (s.upper if s.upper is not None else math.inf) - si)
        reports.append(CheckReport(f"Si(pi/2) strictly inside {s.name}", margin > 0, math.nan,
                                   margin, None, 0.0))
    digits = [("p_half", "lower", "1.31"), ("p_half", "upper", "2.76"),
              ("p_two_over_pi", "lower", "1.34"), ("p_two_over_pi", "upper", "1.40"),
              ("optimal_p", "lower", "1.36"), ("optimal_p", "upper", "1.37"),
              ("prior_4/3", "lower", "1.33"), ("prior_4/3", "upper", "1.38"),
              ("prior_(pi+5)/6", "lower", "1.35")]
    for name, side, d in digits:
        v = getattr(sets[name], side)
        reports.append(scalar_check(f"{name} {side} = {d}...", 1.0 if _starts_with(v, d) else -1.0,
                                    x=v))
    p_num, p_cf = qd.optimal_p0_numeric(), qd.optimal_p0_closed_form()
    du = central_difference(qd.upper_bound_U, p_num, step=1e-4)
    p_lo, l_max = qd.maximize_lower_bound()
    w1, w2, w3 = (sets[k].width for k in ("p_half", "p_two_over_pi", "optimal_p"))
    opt = sets["optimal_p"]
    reports += [
        scalar_check("p0 closed form = stationary point of U", 1e-12 - abs(p_num - p_cf), x=p_num),
        scalar_check("p0 = 0.52...", 1.0 if _starts_with(p_num, "0.52") and _starts_with(p_cf, "0.52")
                     else -1.0, x=p_num),
        scalar_check("U'(p0) = 0 by central differences", 1e-8 - abs(du), x=p_num),
        scalar_check("U(p0 +- 1e-3) > U(p0)",
                     min(qd.upper_bound_U(p_num + 1e-3), qd.upper_bound_U(p_num - 1e-3))
                     - qd.upper_bound_U(p_num), x=p_num),
        scalar_check("max L(p) = 2(1 - 1/pi)", 1e-12 - abs(l_max - 2 * (1 - 1 / PI)), x=p_lo),
        scalar_check("interval widths: optimal < p = 2/pi < p = 1/2", min(w2 - w3, w1 - w2)),
        scalar_check("optimal interval nested in p = 1/2 and p = 2/pi intervals",
                     min(min(opt.lower - sets[k].lower, sets[k].upper - opt.upper)
                         for k in ("p_half", "p_two_over_pi"))),
        scalar_check("2(1 - 1/pi) > (pi + 5)/6 > 4/3",
                     min(2 * (1 - 1 / PI) - (PI + 5) / 6, (PI + 5) / 6 - 4 / 3)),
        scalar_check("U(p0) < (pi + 1)/3", (PI + 1) / 3 - opt.upper),
    ]
    return reports


def arcsin_checks(points: int) -> list[CheckReport]:
    grid = GridSpec(0.0, 1.0, points)
    eps4 = 4 * np.finfo(float).eps
    upper = lambda t: np.minimum(ab.fink_upper(t), ab.malesevic_upper(t))  # noqa: E731
    reports = [
        check_inequality(ab.shafer_lower, ab.shafer_middle, grid,
                         name="3t/(2 + sqrt(1-t^2)) <= Shafer middle bound"),
        check_inequality(ab.shafer_middle, np.arcsin, grid, name="Shafer middle bound <= arcsin"),
        check_inequality(np.arcsin, upper, grid, name="arcsin <= min(Fink, Malesevic)"),
        check_inequality(ab.zhu_lower_a, np.arcsin, grid, name="Zhu lower bound (a) <= arcsin"),
        check_inequality(ab.zhu_lower_b, np.arcsin, grid, name="Zhu lower bound (b) <= arcsin"),
        check_inequality(ab.malesevic_upper, ab.fink_upper, grid,
                         name="Malesevic bound <= Fink bound"),
    ]
    for f in (ab.fink_upper, ab.malesevic_upper, ab.zhu_lower_b):
        reports.append(scalar_check(f"{f.__name__}(1) = pi/2",
                                    eps4 * PI / 2 - abs(f(1.0) - PI / 2)))
    ts = grid.nodes()
    for name, (p, c) in ab.CORRESPONDENCE.items():
        direct = getattr(ab, name)(ts)
        bridged = ab.oppenheim_to_arcsin(p, c, ts)
        err = np.max(np.abs(direct - bridged) / np.maximum(np.abs(direct), 1e-300))
        reports.append(scalar_check(f"{name} = Oppenheim bound (p={p:.6g}, c={c:.6g}) at t = sin x",
                                    eps4 - err))
    lowers = {"shafer_lower": ab.shafer_lower(ts), "zhu_lower_a": ab.zhu_lower_a(ts),
              "zhu_lower_b": ab.zhu_lower_b(ts)}
    names = list(lowers)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            d = lowers[a] - lowers[b]
            reports.append(scalar_check(f"{a} and {b} do not dominate each other",
                                        min(d.max(), -d.min())))
    return reports


def lhospital_checks(points: int) -> list[CheckReport]:
    grid = GridSpec(0.0, HALF_PI, points, open_lo=True, open_hi=True)
    return [lhospital_monotone_check(
        an.sin_minus_xcos, an.x_minus_sincos,
        lambda x: x * np.sin(x), lambda x: 2 * np.sin(x) ** 2, grid,
        name="h = h1/h2 increasing from h1'/h2' = x/(2 sin x)")]


def standard_suite(points: int = DEFAULT_POINTS, tol: float = 1e-12,
                   sharpness: bool = False) -> list[CheckReport]:
    reports = (cusa_checks(points) + oppenheim_checks(points, max(10 * points, 10_000))
               + theorem_checks(points) + quadrature_checks(tol) + arcsin_checks(points)
               + lhospital_checks(points))
    if sharpness:
        reports += sharpness_probes(points)
    return reports
