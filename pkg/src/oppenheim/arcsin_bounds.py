"""Shafer-Fink type rational bounds for arcsin on [0, 1].

Every bound here is an Oppenheim bound c sin x / (1 + p cos x) read through
the substitution t = sin x, so cos x = sqrt(1 - t^2) and x = arcsin t.
``CORRESPONDENCE`` records the (p, c) pair behind each named bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_PI = np.pi


@dataclass(frozen=True)
class UnitArg:
    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise DomainError(f"argument {self.value!r} outside [0, 1]")

    def __float__(self):
        return float(self.value)


def as_unit(t) -> np.ndarray:
    if isinstance(t, UnitArg):
        return np.asarray(t.value, dtype=float)
    t = np.asarray(t, dtype=float)
    if not np.all((t >= 0.0) & (t <= 1.0)):
        raise DomainError("argument outside [0, 1]")
    return t


def _cos_of_arcsin(t):
    # (1 - t)(1 + t) keeps full precision as t -> 1
    return np.sqrt((1.0 - t) * (1.0 + t))


def _out(v):
    return v[()] if isinstance(v, np.ndarray) else v


def shafer_lower(t):
    """3t / (2 + sqrt(1 - t^2))."""
    t = as_unit(t)
    return _out(3.0 * t / (2.0 + _cos_of_arcsin(t)))


def shafer_middle(t):
    """6 (sqrt(1+t) - sqrt(1-t)) / (4 + sqrt(1+t) + sqrt(1-t))."""
    t = as_unit(t)
    up, down = np.sqrt(1.0 + t), np.sqrt(1.0 - t)
    # rationalised difference: no cancellation for small t
    diff = 2.0 * t / (up + down)
    return _out(6.0 * diff / (4.0 + up + down))


def fink_upper(t):
    """pi t / (2 + sqrt(1 - t^2))."""
    t = as_unit(t)
    return _out(_PI * t / (2.0 + _cos_of_arcsin(t)))


def malesevic_upper(t):
    """(pi t / (pi - 2)) / (2 / (pi - 2) + sqrt(1 - t^2))."""
    t = as_unit(t)
    return _out((_PI * t / (_PI - 2)) / (2 / (_PI - 2) + _cos_of_arcsin(t)))


def zhu_lower_a(t):
    """pi (4 - pi) t / (2 / (pi - 2) + sqrt(1 - t^2))."""
    t = as_unit(t)
    return _out(_PI * (4 - _PI) * t / (2 / (_PI - 2) + _cos_of_arcsin(t)))


def zhu_lower_b(t):
    """(pi t / 2) / (1 + sqrt(1 - t^2))."""
    t = as_unit(t)
    return _out((_PI * t / 2) / (1.0 + _cos_of_arcsin(t)))


def oppenheim_to_arcsin(p, c, t):
    """c t / (1 + p sqrt(1 - t^2)): the Oppenheim bound after t = sin x."""
    p = float(p)
    if not p > 0:
        raise DomainError(f"parameter p must be positive, got {p!r}")
    if not c > 0:
        raise DomainError(f"constant c must be positive, got {c!r}")
    t = as_unit(t)
    return _out(c * t / (1.0 + p * _cos_of_arcsin(t)))


# Divide numerator and denominator of each bound by its constant term to get
# the Oppenheim form.  Lower bounds of arcsin come from q, upper bounds from r.
CORRESPONDENCE = {
    "shafer_lower": (0.5, 1.5),                    # q = 1 + p at p = 1/2
    "fink_upper": (0.5, _PI / 2),                  # r = pi/2 at p = 1/2
    "malesevic_upper": (_PI / 2 - 1, _PI / 2),     # r = 1 + p at p = pi/2 - 1
    "zhu_lower_a": (_PI / 2 - 1, _PI * (4 - _PI) * (_PI - 2) / 2),  # q = 4p(1 - p^2)
    "zhu_lower_b": (1.0, _PI / 2),                 # q = pi/2 at p = 1
}
