"""Taylor-series kernels for differences that cancel catastrophically near x = 0.

Each kernel returns an expression like ``sin x - x cos x`` to full relative
precision on [0, SERIES_CUTOFF); callers switch to the closed form above it.
"""

from fractions import Fraction
from math import factorial

import numpy as np

SERIES_CUTOFF = 0.5
_TERMS = 14  # (2 * 0.5)**29 / 29! is far below one ulp


def _coeffs(term) -> np.ndarray:
    return np.array([float(term(k)) for k in range(1, _TERMS + 1)])


# x - sin x = x^3 * sum_k (-1)^(k+1) / (2k+1)! * x^(2k-2)
_X_MINUS_SIN = _coeffs(lambda k: Fraction((-1) ** (k + 1), factorial(2 * k + 1)))
# sin x - x cos x
_SIN_MINUS_XCOS = _coeffs(lambda k: Fraction((-1) ** (k + 1) * 2 * k, factorial(2 * k + 1)))
# x - sin x cos x = x - sin(2x)/2
_X_MINUS_SINCOS = _coeffs(lambda k: Fraction((-1) ** (k + 1) * 4**k, factorial(2 * k + 1)))
# g(x) = 2x^2 + x sin 2x + 2 cos 2x - 2 = sum_{m>=3} (-1)^(m+1) 4^m (m-2)/(2m)! x^(2m)
_G = np.array([float(Fraction((-1) ** (m + 1) * 4**m * (m - 2), factorial(2 * m)))
               for m in range(3, _TERMS + 3)])
_G_PRIME = np.array([c * 2 * m for c, m in zip(_G, range(3, _TERMS + 3))])


def horner(coeffs, y):
    acc = np.zeros_like(y)
    for c in coeffs[::-1]:
        acc = acc * y + c
    return acc


def x_minus_sin(x):
    return x**3 * horner(_X_MINUS_SIN, x * x)


def sin_minus_xcos(x):
    return x**3 * horner(_SIN_MINUS_XCOS, x * x)


def x_minus_sincos(x):
    return x**3 * horner(_X_MINUS_SINCOS, x * x)


def g(x):
    return x**6 * horner(_G, x * x)


def g_prime(x):
    return x**5 * horner(_G_PRIME, x * x)


def weighted_sinc_gap(x, p):
    """(1+p) sin x - x (1 + p cos x), with the p-dependent coefficients combined first.

    The x^3 coefficient is (2p - 1)/6, so at p = 1/2 the leading term
    vanishes exactly instead of being left as rounding noise.
    """
    k = np.arange(1, _TERMS + 1)
    signs = (-1.0) ** (k + 1)
    facts = np.array([float(factorial(2 * j + 1)) for j in k])
    coeffs = signs * (2 * k * p - 1) / facts
    return x**3 * horner(coeffs, x * x)


def cusa_numerator(x, a, b, c):
    """x (a + b cos x) - c sin x, summed coefficient-wise."""
    k = np.arange(0, _TERMS + 1)
    facts = np.array([float(factorial(2 * j + 1)) for j in k])
    coeffs = (-1.0) ** k * (b * (2 * k + 1) - c) / facts
    coeffs[0] = (a + b) - c
    return x * horner(coeffs, x * x)
