"""Coefficient tables feeding the sampling-kernel evaluators.

Three families are built here:

* ``wallis(j)``: the sine-power integrals B_j over [0, pi],
* ``a_coefficients(k, n_max)``: Taylor coefficients A_n of the angular
  integral entering the kernel's radial representation, via the
  binomial recurrence A_n^(k) = B_{2n+k-2} * sum_l C(n,l) A_l^(k-1),
* ``c_coefficients(k, l_max)``: the alternating binomial sums C_l^(k)
  weighting the Laguerre kernel series, with a 1-D integral route for
  large l where the alternating sum cancels.

All tables are positive; the recurrences are carried out with exact
integer binomials and, where downstream cancellation demands it, in
extended precision (mpmath) before rounding to float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp
import numpy as np

from .errors import DomainError

__all__ = [
    "CoefficientCache",
    "wallis",
    "a_coefficients",
    "c_coefficients",
    "build_cache",
]


def wallis(j: int) -> float:
    """B_j = integral of sin^j over [0, pi] = sqrt(pi) Gamma((j+1)/2) / Gamma((j+2)/2).

    Evaluated through log-gamma so large j neither overflows nor loses
    precision.  B_0 = pi and B_1 = 2 exactly.
    """
    if j < 0:
        raise DomainError(f"wallis index must be >= 0, got {j}")
    if j == 0:
        return math.pi
    if j == 1:
        return 2.0
    return math.sqrt(math.pi) * math.exp(
        math.lgamma((j + 1) / 2) - math.lgamma((j + 2) / 2)
    )


def _wallis_mp(j: int) -> mp.mpf:
    return mp.sqrt(mp.pi) * mp.gamma(mp.mpf(j + 1) / 2) / mp.gamma(mp.mpf(j + 2) / 2)


@lru_cache(maxsize=None)
def _a_coefficients_mp(k: int, n_max: int, dps: int) -> tuple:
    """A_0..A_n_max for the given k as mpf values at working precision dps.

    The recurrence is a positive sum with exact integer binomials, so the
    only precision loss is representational.  Extended precision matters
    because the downstream Taylor series of the angular integral cancels
    by up to exp((k-1) rho^2) and inherits the relative error of A_n.
    """
    if k < 2:
        raise DomainError(f"a_coefficients requires k >= 2, got {k}")
    with mp.workdps(dps):
        rows = [None] * (k + 1)
        rows[2] = [2 * _wallis_mp(2 * n) for n in range(n_max + 1)]
        for kk in range(3, k + 1):
            prev = rows[kk - 1]
            rows[kk] = [
                _wallis_mp(2 * n + kk - 2)
                * mp.fsum(mp.mpf(math.comb(n, l)) * prev[l] for l in range(n + 1))
                for n in range(n_max + 1)
            ]
        return tuple(rows[k])


def a_coefficients(k: int, n_max: int) -> np.ndarray:
    """A_0..A_{n_max} for moment order k >= 2, as positive floats.

    A_0^(2) = 2 pi; each A_n is an integral of a positive integrand and
    the recurrence preserves positivity term by term.
    """
    if k < 2:
        raise DomainError(
            f"a_coefficients requires k >= 2 (k=1 has no angular integral), got {k}"
        )
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    vals = _a_coefficients_mp(k, n_max, 40)
    return np.array([float(v) for v in vals])


def _c_small_l(k: int, l: int) -> float:
    """Alternating binomial sum for C_l^(k), compensated via exact fsum.

    c_n = 1/sqrt((n+1)...(n+k)) is completely monotone, so the sum is
    positive; binomials are exact integers and the cancellation for
    l <= 30 stays within double precision.
    """
    terms = []
    for n in range(l + 1):
        log_c = -0.5 * (math.lgamma(n + k + 1) - math.lgamma(n + 1))
        terms.append((-1.0) ** n * math.comb(l, n) * math.exp(log_c))
    return math.fsum(terms)


def _c_large_l(k: int, ls: np.ndarray) -> np.ndarray:
    """C_l^(k) by the reduced radial integral.

    C_l^(k) = pi^{-k/2} * int_0^inf rho^{k-1} Omega^(k)(rho^2) (1-e^{-rho^2})^l drho.
    The integrand is smooth and decays like exp(-rho^2), so a fixed
    Gauss-Legendre rule on [0, 9] is accurate to machine precision.
    """
    from .omega import omega_array

    nodes, weights = np.polynomial.legendre.leggauss(400)
    rho = 4.5 * (nodes + 1.0)
    w = 4.5 * weights
    base = w * rho ** (k - 1) * omega_array(k, rho * rho) / math.pi ** (k / 2)
    z = 1.0 - np.exp(-rho * rho)
    # rows: one value of l each; log-power to avoid underflow churn
    out = np.empty(len(ls))
    logz = np.log(z)
    for i, l in enumerate(ls):
        out[i] = float(np.sum(base * np.exp(l * logz)))
    return out


def c_coefficients(k: int, l_max: int) -> np.ndarray:
    """C_0..C_{l_max} for moment order k >= 1.

    l <= 30 uses the alternating binomial sum; larger l uses the radial
    integral form, which is free of cancellation.  C_0^(k) = 1/sqrt(k!),
    and the sequence is positive and nonincreasing.
    """
    if k < 1:
        raise DomainError(f"c_coefficients requires k >= 1, got {k}")
    if l_max < 0:
        raise DomainError(f"l_max must be >= 0, got {l_max}")
    n_small = min(l_max, 30)
    out = np.empty(l_max + 1)
    for l in range(n_small + 1):
        out[l] = _c_small_l(k, l)
    if l_max > 30:
        ls = np.arange(31, l_max + 1)
        out[31:] = _c_large_l(k, ls)
    return out


@dataclass(frozen=True)
class CoefficientCache:
    """Immutable coefficient tables for one moment order k.

    a_coeffs is empty for k = 1, where the angular integral is trivial.
    """

    k: int
    a_coeffs: np.ndarray
    c_coeffs: np.ndarray
    b_values: np.ndarray

    def __post_init__(self):
        if np.any(self.c_coeffs <= 0):
            raise DomainError(f"C coefficients for k={self.k} are not all positive")
        if self.k >= 2 and np.any(self.a_coeffs <= 0):
            raise DomainError(f"A coefficients for k={self.k} are not all positive")


@lru_cache(maxsize=None)
def build_cache(k: int, n_max: int = 160, l_max: int = 500) -> CoefficientCache:
    """Build (and memoize) the coefficient tables for moment order k."""
    if k < 1:
        raise DomainError(f"moment order must be >= 1, got {k}")
    a = a_coefficients(k, n_max) if k >= 2 else np.empty(0)
    c = c_coefficients(k, l_max)
    b = np.array([wallis(j) for j in range(2 * n_max + max(k, 2))])
    return CoefficientCache(k=k, a_coeffs=a, c_coeffs=c, b_values=b)
