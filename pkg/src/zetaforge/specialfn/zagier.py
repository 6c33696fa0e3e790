"""Zagier's A(x) and its higher analogues A_m(x)."""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from .core import ConstraintViolation, EvalResult
from .quadrature import gauss_kronrod

__all__ = ["zagier_A", "zagier_A_m"]


def zagier_A_result(x: float, tol: float = 1e-14) -> EvalResult:
    """A(x) = int_0^x log(4/(1+t^2)) dt/(1+t^2).

    With t = tan(theta) this is int_0^{arctan x} 2 log(2 cos theta) d theta; we
    integrate in phi = pi/2 - theta, where the integrand is 2 log(2 sin phi).
    A is odd, so negative x is allowed.
    """
    x = float(x)
    if x == 0:
        return EvalResult(0j, 0.0, 0)
    sign = 1.0 if x > 0 else -1.0
    lo = math.atan2(1.0, abs(x))  # pi/2 - arctan|x| without cancellation
    f = lambda phi: 2.0 * np.log(2.0 * np.sin(phi))
    val, err, n = gauss_kronrod(f, lo, math.pi / 2, abs_tol=tol, rel_tol=tol)
    return EvalResult(complex(sign * val), err, n)


def zagier_A(x: float) -> float:
    return zagier_A_result(x).value.real


def _A_m_tail_bound(n: int, x: float, T: float) -> float:
    # x sinh^2 + cosh^2/x >= (x + 1/x) sinh^2 t >= (x + 1/x) e^{2t}(1 - e^{-2T})^2/4 for t >= T
    c = 4.0 / ((x + 1.0 / x) * (1 - math.exp(-2 * T)) ** 2)
    # int_T^oo t^n e^{-2t} dt = Gamma(n+1, 2T)/2^(n+1)
    return c * special.gammaincc(n + 1, 2 * T) * math.gamma(n + 1) / 2 ** (n + 1)


def zagier_A_m_result(m: int, x: float, tol: float = 1e-14) -> EvalResult:
    """A_m(x) = 2^(2m-1)/(2m-1)! * int_0^oo t^(2m-1) dt/(x sinh^2 t + cosh^2 t/x)."""
    if m < 1:
        raise ConstraintViolation("m must be >= 1")
    x = float(x)
    if not x > 0:
        raise ConstraintViolation("A_m needs x > 0")
    n = 2 * m - 1
    pref = 2.0 ** n / math.factorial(n)
    T = 20.0
    while pref * _A_m_tail_bound(n, x, T) > 1e-17:
        T += 5.0
    tail = pref * _A_m_tail_bound(n, x, T)
    ix = 1.0 / x

    def f(t):
        sh = np.sinh(t)
        ch = np.cosh(t)
        return t**n / (x * sh * sh + ix * ch * ch)

    val, err, evals = gauss_kronrod(f, 0.0, T, abs_tol=tol / pref, rel_tol=tol, breakpoints=np.arange(0.0, T, 2.5)[1:])
    return EvalResult(complex(pref * val), pref * err + tail, evals)


def zagier_A_m(m: int, x: float) -> float:
    return zagier_A_m_result(m, x).value.real
