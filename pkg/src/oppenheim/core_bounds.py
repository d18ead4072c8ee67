"""Elementary bound functions on [0, pi/2] and their domain types.

All functions accept a float or a numpy array for ``x`` and are vectorised;
scalar input gives a numpy float64 back.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _series
from .errors import DomainError

HALF_PI = np.pi / 2
_SINC_SERIES_BELOW = 2.0**-26


@dataclass(frozen=True)
class Radians:
    """An angle in [0, pi/2]."""

    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= HALF_PI:
            raise DomainError(f"angle {self.value!r} outside [0, pi/2]")

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class PosParam:
    """The Oppenheim parameter p > 0."""

    value: float

    def __post_init__(self):
        if not self.value > 0.0:
            raise DomainError(f"parameter p must be positive, got {self.value!r}")

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class CusaTriple:
    """Coefficients (a, b, c) of c sin x / (a + b cos x) with 2b <= c <= a + b."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and self.c > 0):
            raise DomainError(f"a, b, c must be positive: {self}")
        if not 2 * self.b <= self.c <= self.a + self.b:
            raise DomainError(f"need 2b <= c <= a + b: {self}")


def as_radians(x) -> np.ndarray:
    """Coerce ``x`` to a float array and reject anything outside [0, pi/2]."""
    if isinstance(x, Radians):
        return np.asarray(x.value, dtype=float)
    x = np.asarray(x, dtype=float)
    if not np.all((x >= 0.0) & (x <= HALF_PI)):
        bad = x[~((x >= 0.0) & (x <= HALF_PI))] if x.ndim else x
        raise DomainError(f"angle outside [0, pi/2]: {np.ravel(bad)[0]!r}")
    return x


def as_param(p) -> float:
    p = float(p)
    if not p > 0.0:
        raise DomainError(f"parameter p must be positive, got {p!r}")
    return p


def _scalar(out):
    return out[()] if isinstance(out, np.ndarray) else out


def oppenheim_bound(x, p, c):
    """c sin x / (1 + p cos x)."""
    x = as_radians(x)
    p = as_param(p)
    if not c > 0:
        raise DomainError(f"constant c must be positive, got {c!r}")
    return _scalar(c * np.sin(x) / (1.0 + p * np.cos(x)))


def sinc(x):
    """sin(x)/x with the removable singularity at 0 filled in."""
    x = as_radians(x)
    small = np.abs(x) < _SINC_SERIES_BELOW
    safe = np.where(small, 1.0, x)
    return _scalar(np.where(small, 1.0 - x * x / 6.0, np.sin(safe) / safe))


def cusa_lower_simple(x):
    x = as_radians(x)
    return _scalar((1.0 + np.cos(x)) / 2.0)


def cusa_lower_refined(x):
    x = as_radians(x)
    return _scalar((1.0 + 2.0 * np.cos(x)) / 3.0 + x * np.sin(x) / 6.0)


def _open_interval(x):
    x = as_radians(x)
    if np.any(x == 0.0) or np.any(x == HALF_PI):
        raise DomainError("the generalised Cusa inequality is strict on (0, pi/2) only")
    return x


def cusa_general(x, t: CusaTriple):
    """c sin x / (a + b cos x) on the open interval (0, pi/2)."""
    x = _open_interval(x)
    return _scalar(t.c * np.sin(x) / (t.a + t.b * np.cos(x)))


def cusa_general_gap(x, t: CusaTriple):
    """x - cusa_general(x, t), accurate near 0 where the two sides agree to high order.

    For Cusa's own triple (2, 1, 3) the gap is x^5/180 + O(x^7), which plain
    subtraction cannot resolve below x ~ 1e-3.
    """
    x = _open_interval(x)
    denom = t.a + t.b * np.cos(x)
    small = x < _series.SERIES_CUTOFF
    num = np.where(small,
                   _series.cusa_numerator(np.where(small, x, 0.0), t.a, t.b, t.c),
                   x * denom - t.c * np.sin(x))
    return _scalar(num / denom)
