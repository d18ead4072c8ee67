"""Oppenheim and Shafer-Fink two-sided bounds for sin, cos and arcsin.

Best constants for q sin x/(1 + p cos x) <= x <= r sin x/(1 + p cos x),
the monotonicity of sin x/(x(1 + p cos x)), integral bounds for Si(pi/2),
and grid certification of all of it.
"""

from .analysis import (ConstantPair, Regime, Source, classify, critical_point, f_p, f_p_prime,
                       h, numeric_constants, paper_constants)
from .core_bounds import CusaTriple, PosParam, Radians, oppenheim_bound, sinc
from .errors import (BracketError, ConvergenceError, DomainError, EvaluationError,
                     PreconditionError, RegimeError)
from .quadrature import optimal_p0_closed_form, optimal_p0_numeric, si_half_pi
from .verify import CheckReport, GridSpec

__version__ = "0.1.0"

__all__ = [
    "BracketError", "CheckReport", "ConstantPair", "ConvergenceError", "CusaTriple",
    "DomainError", "EvaluationError", "GridSpec", "PosParam", "PreconditionError", "Radians",
    "Regime", "RegimeError", "Source", "classify", "critical_point", "f_p", "f_p_prime", "h",
    "numeric_constants", "oppenheim_bound", "optimal_p0_closed_form", "optimal_p0_numeric",
    "paper_constants", "si_half_pi", "sinc",
]
