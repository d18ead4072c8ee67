"""Command-line front end: ``oppenheim {verify,constants,si,table,sweep}``.

Exit codes: 0 all checks pass, 1 a claim failed or a computation did not
converge, 2 usage error.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import analysis as an
from . import quadrature as qd
from .core_bounds import HALF_PI, oppenheim_bound
from .errors import ConvergenceError
from .suite import p_sweep, standard_suite
from .verify import CSV_HEADER, DEFAULT_POINTS, GridSpec

COMMANDS = ("verify", "constants", "si", "table", "sweep")


@dataclass(frozen=True)
class RunConfig:
    command: str
    p: Optional[float] = None
    grid_points: int = DEFAULT_POINTS
    tol: float = 1e-12
    output: str = "plain"
    sharpness: bool = False


def _positive_float(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {s!r}")
    return v


def _grid_points(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 2:
        raise argparse.ArgumentTypeError("need at least 2 grid points")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid-points", type=_grid_points, default=DEFAULT_POINTS)
    common.add_argument("--tol", type=_positive_float, default=1e-12,
                        help="absolute tolerance for the sine-integral quadrature")
    common.add_argument("--format", dest="output", choices=("plain", "csv"), default="plain")

    with_p = argparse.ArgumentParser(add_help=False)
    with_p.add_argument("--p", type=_positive_float, required=True)

    parser = argparse.ArgumentParser(
        prog="oppenheim",
        description="Oppenheim and Shafer-Fink bounds: best constants and grid certification.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run every claim as a named check")
    v.add_argument("--sharpness", action="store_true",
                   help="also run sharpness probes (expected violations)")
    sub.add_parser("constants", parents=[common, with_p], help="best constants q(p), r(p)")
    sub.add_parser("si", parents=[common], help="Si(pi/2), its bounds and p0")
    sub.add_parser("table", parents=[common, with_p], help="CSV table of the two-sided bound")
    sub.add_parser("sweep", parents=[common], help="constants over the standard p sweep")
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(command=ns.command, p=getattr(ns, "p", None), grid_points=ns.grid_points,
                     tol=ns.tol, output=ns.output, sharpness=getattr(ns, "sharpness", False))


def _num(v) -> str:
    return repr(float(v))


def _csv(rows, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerows(rows)


def cmd_verify(cfg: RunConfig, out) -> int:
    reports = standard_suite(cfg.grid_points, cfg.tol, sharpness=cfg.sharpness)
    if cfg.output == "csv":
        out.write(CSV_HEADER + "\n")
        for r in reports:
            out.write(r.csv_row() + "\n")
    else:
        for r in reports:
            out.write(r.plain() + "\n")
        failed = sum(not r.passed for r in reports)
        out.write(f"{len(reports) - failed}/{len(reports)} checks verified on grid "
                  f"({cfg.grid_points} points)\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_constants(cfg: RunConfig, out) -> int:
    p = cfg.p
    regime = an.classify(p)
    paper = an.paper_constants(p)
    numeric = an.numeric_constants(p)
    x_star = an.critical_point(p) if 0.5 < p < an.TWO_OVER_PI else None
    if cfg.output == "csv":
        _csv([["p", "regime", "closed_form_q", "closed_form_r", "numeric_q", "numeric_r", "critical_x"],
              [_num(p), regime.value, _num(paper.q), _num(paper.r), _num(numeric.q),
               _num(numeric.r), "" if x_star is None else _num(x_star)]], out)
        return 0
    lo, hi = regime.boundaries
    out.write(f"p = {p!r}\nregime = {regime.value}  [{lo:.10g}, {hi:.10g})\n")
    out.write(f"closed form: q = {paper.q!r}, r = {paper.r!r}\n")
    out.write(f"optimal:     q = {numeric.q!r}, r = {numeric.r!r}\n")
    if x_star is not None:
        out.write(f"critical point x* = {x_star!r}\n")
    for value, name in ((paper.q, "q"), (paper.r, "r")):
        if value == math.pi / 2:
            out.write(f"{name} = pi/2\n")
    if p in (0.5, an.PI_HALF_MINUS_ONE, an.TWO_OVER_PI):
        out.write("boundary value: neighbouring case formulas agree here"
                  if p != an.TWO_OVER_PI else
                  "boundary value: closed-form q jumps from 4p(1-p^2) to pi/2 here")
        out.write("\n")
    return 0


def cmd_si(cfg: RunConfig, out) -> int:
    try:
        si = qd.si_half_pi(cfg.tol)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    series = qd.si_half_pi_series()
    sets = sorted(qd.all_bound_sets(), key=lambda s: s.width)
    p_num, p_cf = qd.optimal_p0_numeric(), qd.optimal_p0_closed_form()
    p_l, l_max = qd.maximize_lower_bound()
    if cfg.output == "csv":
        rows = [["name", "lower", "upper", "width", "contains_si"]]
        rows += [[s.name, "" if s.lower is None else _num(s.lower),
                  "" if s.upper is None else _num(s.upper), _num(s.width),
                  "true" if s.contains(si) else "false"] for s in sets]
        rows += [["si_half_pi", _num(si), _num(si), "0", ""],
                 ["p0_numeric", _num(p_num), "", "", ""],
                 ["p0_closed_form", _num(p_cf), "", "", ""]]
        _csv(rows, out)
        return 0
    out.write(f"Si(pi/2) = {si!r}  (series {series!r})\n")
    out.write(f"p0 numeric = {p_num!r}, closed form = {p_cf!r}, "
              f"difference = {abs(p_num - p_cf):.3g}\n")
    out.write(f"max lower bound L = {l_max!r} at p = {p_l!r}\n")
    out.write("bound sets, narrowest first:\n")
    for rank, s in enumerate(sets, 1):
        lo = "-inf" if s.lower is None else f"{s.lower:.10f}"
        hi = "+inf" if s.upper is None else f"{s.upper:.10f}"
        mark = "contains" if s.contains(si) else "MISSES"
        out.write(f"  {rank}. {s.name:<16} ({lo}, {hi})  width {s.width:.6g}  {mark} Si\n")
    return 0


def cmd_table(cfg: RunConfig, out) -> int:
    p = cfg.p
    c = an.numeric_constants(p)
    xs = GridSpec(0.0, HALF_PI, cfg.grid_points).nodes()
    lower = oppenheim_bound(xs, p, c.q)
    upper = oppenheim_bound(xs, p, c.r)
    rows = [["x", "lower", "exact", "upper", "lo_margin", "hi_margin"]]
    rows += [[_num(x), _num(lo), _num(x), _num(hi), _num(x - lo), _num(hi - x)]
             for x, lo, hi in zip(xs, np.atleast_1d(lower), np.atleast_1d(upper))]
    _csv(rows, out)
    return 0


def cmd_sweep(cfg: RunConfig, out) -> int:
    rows = [["p", "regime", "closed_form_q", "closed_form_r", "numeric_q", "numeric_r"]]
    for p in p_sweep():
        paper, numeric = an.paper_constants(p), an.numeric_constants(p)
        rows.append([_num(p), an.classify(p).value, _num(paper.q), _num(paper.r),
                     _num(numeric.q), _num(numeric.r)])
    if cfg.output == "csv":
        _csv(rows, out)
    else:
        for r in rows:
            out.write("  ".join(f"{v:>22}" if i != 1 else f"{v:>6}" for i, v in enumerate(r)) + "\n")
    return 0


HANDLERS = {"verify": cmd_verify, "constants": cmd_constants, "si": cmd_si,
            "table": cmd_table, "sweep": cmd_sweep}


def main(argv=None, out=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    return HANDLERS[cfg.command](cfg, sys.stdout if out is None else out)


def run(argv=None) -> str:
    """Run a command and return its stdout (convenience for notebooks and tests)."""
    buf = io.StringIO()
    main(argv, buf)
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
