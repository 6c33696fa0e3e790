"""Oscillatory and exponentially damped tail integrals over [a, oo).

Beyond a switch point the integrals are summed from their asymptotic
integration-by-parts expansions (truncated at the smallest term); the
remaining finite stretch is handled by adaptive quadrature.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special

from .core import ConstraintViolation, EvalResult, Flag
from .quadrature import gauss_kronrod

__all__ = [
    "osc_power_tail",
    "hankel_power_tail",
    "k0_power_tail",
    "sine_tail_integral",
]

_ORDER = 64
_ROUND = 4e-16


def _switch_point(s0: complex) -> float:
    # smallest term of the expansion is roughly exp(-(R - |s|))
    return 40.0 + abs(s0)


def _hankel_coeffs(n: int) -> np.ndarray:
    a = np.empty(n)
    a[0] = 1.0
    for j in range(1, n):
        a[j] = -a[j - 1] * (2 * j - 1) ** 2 / (8.0 * j)
    return a


_HANKEL_A = _hankel_coeffs(_ORDER)


def _osc_asym(s0: complex, R: float, sigma: int, coeffs: np.ndarray):
    """sum_j coeffs[j] R^-j int_R^oo r^-(s0+j) e^{i sigma r} dr, asymptotically.

    Returns (value, error). Each double-series row stops at its smallest term.
    """
    J = len(coeffs)
    K = _ORDER
    j = np.arange(J)[:, None]
    k = np.arange(K - 1)[None, :]
    ratio = (s0 + j + k) * (-1j * sigma / R)
    poch = np.concatenate([np.ones((J, 1), complex), np.cumprod(ratio, axis=1)], axis=1)
    row = coeffs * R ** (-np.arange(J, dtype=float))
    terms = row[:, None] * poch
    mag = np.abs(terms)
    keep = mag <= np.minimum.accumulate(mag, axis=1)
    # rows past the smallest leading coefficient are dropped as a block
    lead = np.abs(row)
    keep &= (lead <= np.minimum.accumulate(lead))[:, None]
    total = np.sum(terms[keep])
    # error: the first dropped term of each kept row, plus the first dropped row
    rows = keep[:, 0]
    nrows = int(np.argmin(rows)) if not rows.all() else J
    err = lead[nrows] * max(1.0, abs(s0 + nrows)) if nrows < J else 0.0
    full = keep[:nrows].all(axis=1)
    stop = np.where(full, K - 1, np.argmin(keep[:nrows], axis=1))
    err += float(np.sum(mag[np.arange(nrows), stop]))
    pref = sigma * 1j * cmath.exp(1j * sigma * R) * R ** (-s0)
    return pref * total, abs(pref) * (err + 1e-16 * np.sum(mag[keep]))


def _quad(f, a, b, tol):
    val, err, n = gauss_kronrod(f, a, b, abs_tol=tol, rel_tol=1e-14,
                                breakpoints=np.arange(a, b, 4 * math.pi)[1:])
    return val, err, n


def osc_power_tail(s: complex, a: float, sign: int = 1, tol: float = 1e-15) -> EvalResult:
    """Integral of x**(-s) * exp(i*sign*x) over [a, oo).

    For Re s <= 0 the integral diverges; the expansion then supplies the
    Abel-regularised value and the result carries the Regularized flag.
    """
    if a <= 0:
        raise ConstraintViolation("lower limit must be positive")
    s = complex(s)
    sigma = 1 if sign >= 0 else -1
    flags = frozenset({Flag.REGULARIZED}) if s.real <= 0 else frozenset()
    A0 = max(a, _switch_point(s))
    v, e = _osc_asym(s, A0, sigma, np.ones(1))
    n = 0
    if A0 > a:
        q, qe, n = _quad(lambda x: np.exp(-s * np.log(x) + 1j * sigma * x), a, A0, tol)
        v += q
        e += qe
    e += _ROUND * abs(v)
    return EvalResult(complex(v), float(e), n, flags)


def hankel_power_tail(mu: complex, R: float, sign: int = 1, tol: float = 1e-15) -> EvalResult:
    """Integral of r**mu * H0(r) over [R, oo) with H0 = H0^(1) (sign=+1) or H0^(2) (sign=-1).

    Converges for Re mu < -1/2; elsewhere the regularised value is returned.
    """
    if R <= 0:
        raise ConstraintViolation("lower limit must be positive")
    mu = complex(mu)
    sigma = 1 if sign >= 0 else -1
    s0 = 0.5 - mu
    flags = frozenset({Flag.REGULARIZED}) if s0.real <= 0 else frozenset()
    A0 = max(R, _switch_point(s0) + 8.0)
    coeffs = (1j * sigma) ** np.arange(_ORDER) * _HANKEL_A
    v, e = _osc_asym(s0, A0, sigma, coeffs)
    scale = math.sqrt(2 / math.pi) * cmath.exp(-1j * sigma * math.pi / 4)
    v *= scale
    e *= abs(scale)
    n = 0
    if A0 > R:
        h = special.hankel1 if sigma > 0 else special.hankel2
        q, qe, n = _quad(lambda r: np.exp(mu * np.log(r)) * h(0, r), R, A0, tol)
        v += q
        e += qe
    e += _ROUND * abs(v)
    return EvalResult(complex(v), float(e), n, flags)


def k0_power_tail(mu: complex, R: float, tol: float = 1e-16) -> EvalResult:
    """Integral of r**mu * K0(r) over [R, oo)."""
    if R <= 0:
        raise ConstraintViolation("lower limit must be positive")
    mu = complex(mu)
    if R > 700:
        return EvalResult(0j, 0.0, 0)
    if R > 40 and mu.real <= 0:
        # K0 decreases with K0(r) <= K0(R) exp(R - r), so the integral is below R**mu K0(R)
        return EvalResult(0j, float(R**mu.real * special.k0(R)), 0)
    # K0(r) = k0e(r) exp(-r); 40 e-foldings past R is below double precision
    f = lambda r: np.exp(mu * np.log(r) - r) * special.k0e(r)
    hi = R + 40.0 + 2 * abs(mu)
    q, qe, n = gauss_kronrod(f, R, hi, abs_tol=tol, rel_tol=1e-14)
    return EvalResult(complex(q), float(qe), n)


def sine_tail_integral(u: complex, a: float, tol: float = 1e-15) -> EvalResult:
    """Integral of x**(-u-1) * sin(x) over [a, oo), for Re u > -1."""
    u = complex(u)
    if u.real <= -1:
        raise ConstraintViolation("sine tail needs Re u > -1")
    plus = osc_power_tail(u + 1, a, +1, tol)
    minus = osc_power_tail(u + 1, a, -1, tol)
    val = (plus.value - minus.value) / 2j
    if u.imag == 0:
        val = complex(val.real, 0.0)
    err = 0.5 * (plus.abs_error_estimate + minus.abs_error_estimate)
    return EvalResult(val, err, plus.terms_used + minus.terms_used)
