"""The Meijer function G^{0,3}_{3,1}(1, u, u; 0 | z) and the Bessel moment.

``G(u, x, phase)`` denotes G^{0,3}_{3,1}(1, u, u; 0 | x e^{i pi phase}), i.e.

    (1/2 pi i) * integral over Re s = B of Gamma(1 - u + s)^2 z^s / s ds.

Two evaluation routes:

* residue series, closing the contour to the left: the simple pole at s = 0
  gives Gamma(1-u)^2, each double pole at s0 = u - 1 - k gives
  z^s0 / (k!)^2 * ((log z + 2 psi(k+1))/s0 - 1/s0^2). Converges for all x > 0
  but the terms peak near exp(2/sqrt(x)), so it loses digits as x -> 0.
* Bessel tails, for Re u > 1/2 and small x. With X = 1/x and R = 2 sqrt(X)

      G(u, x, 0)  = 2^(2u) * integral_R^oo r^(1-2u) K0(r) dr
      G(u, x, +1) = -i pi e^{ i pi u} 2^(2u-1) * integral_R^oo r^(1-2u) H0^(1)(r) dr
      G(u, x, -1) =  i pi e^{-i pi u} 2^(2u-1) * integral_R^oo r^(1-2u) H0^(2)(r) dr

  which follow from the Mellin transforms of K0 and H0 and are free of
  cancellation for large R.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special

from .core import (
    DEFAULT_PARAMS,
    ConstraintViolation,
    EvalResult,
    Flag,
    SeriesParams,
    complex_gamma,
    reciprocal_gamma,
    digamma_int,
    trigamma_int,
)
from .quadrature import gauss_kronrod
from .tails import hankel_power_tail, k0_power_tail

__all__ = [
    "meijer_g_0331",
    "meijer_g_0331_contour",
    "wilton_g_combo",
    "phased_difference",
    "bessel_moment",
    "bessel_tail",
]

# below this x (and for Re u > 1/2) the Bessel-tail route is used
TAIL_SWITCH_X = 0.25
_EPS = 2.220446049250313e-16


def _nearest_positive_integer(u: complex, eps: float):
    n = round(u.real)
    if n >= 1 and abs(u - n) <= eps:
        return n
    return None


def _log_arg(x: float, phase: int) -> complex:
    return complex(math.log(x), math.pi * phase)


def _residue_series(u: complex, x: float, phase: int, p: SeriesParams) -> EvalResult:
    L = _log_arg(x, phase)
    total = complex_gamma(1 - u) ** 2
    biggest = abs(total)
    psi = -0.5772156649015329  # psi(1)
    prev = math.inf
    last = 0.0
    k = 0
    for k in range(p.max_terms):
        if k:
            psi += 1.0 / k
        s0 = u - 1 - k
        term = cmath.exp(s0 * L - 2 * math.lgamma(k + 1)) * ((L + 2 * psi) / s0 - 1 / (s0 * s0))
        total += term
        mag = abs(term)
        biggest = max(biggest, mag)
        last = mag
        if k > u.real + 1 and mag < prev and mag <= 0.1 * p.tolerance * max(1.0, abs(total)):
            break
        prev = mag
    else:
        return EvalResult(total, last + 8 * _EPS * biggest, p.max_terms, frozenset({Flag.TRUNCATED}))
    return EvalResult(total, last + 32 * _EPS * biggest * (k + 1) ** 0.5, k + 1)


def _residue_integer(N: int, x: float, phase: int, p: SeriesParams) -> EvalResult:
    """Residue series at a positive integer u = N, where s = 0 is a triple pole."""
    L = _log_arg(x, phase)
    psi_n = digamma_int(N)
    total = (L * L / 2 + 2 * psi_n * L + 2 * psi_n**2 + math.pi**2 / 3 - trigamma_int(N)) / math.factorial(N - 1) ** 2
    biggest = abs(total)
    psi = -0.5772156649015329
    prev = math.inf
    last = 0.0
    k = 0
    for k in range(p.max_terms):
        if k:
            psi += 1.0 / k
        if k == N - 1:
            continue
        s0 = N - 1 - k
        term = cmath.exp(s0 * L - 2 * math.lgamma(k + 1)) * ((L + 2 * psi) / s0 - 1 / (s0 * s0))
        total += term
        mag = abs(term)
        biggest = max(biggest, mag)
        last = mag
        if k > N and mag < prev and mag <= 0.1 * p.tolerance * max(1.0, abs(total)):
            break
        prev = mag
    else:
        return EvalResult(total, last + 8 * _EPS * biggest, p.max_terms, frozenset({Flag.TRUNCATED}))
    return EvalResult(total, last + 32 * _EPS * biggest * (k + 1) ** 0.5, k + 1)


def _tail_route(u: complex, x: float, phase: int, p: SeriesParams) -> EvalResult:
    R = 2.0 / math.sqrt(x)
    mu = 1 - 2 * u
    c = 2.0 ** (2 * u - 1)
    tol = min(p.tolerance, 1e-15)
    if phase == 0:
        t = k0_power_tail(mu, R, tol)
        f = 2 * c
    elif phase == 1:
        t = hankel_power_tail(mu, R, +1, tol)
        f = -1j * math.pi * cmath.exp(1j * math.pi * u) * c
    else:
        t = hankel_power_tail(mu, R, -1, tol)
        f = 1j * math.pi * cmath.exp(-1j * math.pi * u) * c
    val = f * t.value
    return EvalResult(val, abs(f) * t.abs_error_estimate + 4 * _EPS * abs(val), t.terms_used, t.flags)


def _merge(a: EvalResult, b: EvalResult, value, extra_err=0.0, flags=()) -> EvalResult:
    return EvalResult(
        value,
        max(a.abs_error_estimate, b.abs_error_estimate) + extra_err,
        a.terms_used + b.terms_used,
        a.flags | b.flags | frozenset(flags),
    )


def meijer_g_0331(u: complex, x: float, phase: int = 0, p: SeriesParams = DEFAULT_PARAMS,
                  route: str = "auto") -> EvalResult:
    """G^{0,3}_{3,1}(1, u, u; 0 | x e^{i pi phase}).

    ``route`` is "auto", "residue" or "tail". The residue route near a positive
    integer u = N evaluates at N -/+ epsilon_perturb and interpolates linearly
    (flag Perturbed); the interpolation error is bounded by comparing the
    midpoint with the exact triple-pole residue sum.
    """
    u = complex(u)
    x = float(x)
    if not x > 0:
        raise ConstraintViolation("meijer_g_0331 needs x > 0")
    if phase not in (-1, 0, 1):
        raise ConstraintViolation("phase must be -1, 0 or +1")
    if route == "auto":
        route = "tail" if (x < TAIL_SWITCH_X and u.real > 0.5) else "residue"
    if route == "tail":
        if u.real <= 0.5:
            raise ConstraintViolation("the Bessel-tail route needs Re u > 1/2")
        return _tail_route(u, x, phase, p)
    if route != "residue":
        raise ConstraintViolation(f"unknown route {route!r}")
    eps = p.epsilon_perturb
    N = _nearest_positive_integer(u, eps)
    if N is None:
        return _residue_series(u, x, phase, p)
    lo = _residue_series(complex(N - eps, u.imag), x, phase, p)
    hi = _residue_series(complex(N + eps, u.imag), x, phase, p)
    t = (u.real - (N - eps)) / (2 * eps)
    val = (1 - t) * lo.value + t * hi.value
    exact = _residue_integer(N, x, phase, p)
    defect = abs(0.5 * (lo.value + hi.value) - exact.value)
    return _merge(lo, hi, val, defect, (Flag.PERTURBED,))


def meijer_g_0331_contour(u: complex, x: float, B: float | None = None, T: float = 60.0,
                          tol: float = 1e-13) -> EvalResult:
    """Phase-0 value by direct quadrature along Re s = B.

    Independent of the residue machinery; used as a cross-check. The
    integrand decays like exp(-pi |t|), so truncating at |t| = T is harmless
    for T around 60.
    """
    u = complex(u)
    if B is None:
        B = max(u.real - 1, 0.0) + 0.2
    if not (B > 0 and B > u.real - 1):
        raise ConstraintViolation("abscissa must exceed max(0, Re u - 1)")
    lx = math.log(x)

    def f(t):
        s = B + 1j * t
        return np.exp(2 * special.loggamma(1 - u + s) + s * lx) / s

    val, err, n = gauss_kronrod(f, -T, T, abs_tol=tol, rel_tol=tol, breakpoints=np.arange(-T, T, 5.0)[1:])
    return EvalResult(val / (2 * math.pi), err / (2 * math.pi), n)


def wilton_g_combo(u: complex, x: float, p: SeriesParams = DEFAULT_PARAMS, route: str = "auto") -> EvalResult:
    """-e^{i pi u} G(x e^{-i pi}) - e^{-i pi u} G(x e^{i pi}) - 2 G(x).

    Real for real u; then the real part is returned and the stray imaginary
    part is added to the error estimate.
    """
    u = complex(u)
    gm = meijer_g_0331(u, x, -1, p, route)
    gp = meijer_g_0331(u, x, +1, p, route)
    g0 = meijer_g_0331(u, x, 0, p, route)
    em = cmath.exp(1j * math.pi * u)
    val = -em * gm.value - gp.value / em - 2 * g0.value
    err = abs(em) * gm.abs_error_estimate + gp.abs_error_estimate / abs(em) + 2 * g0.abs_error_estimate
    if u.imag == 0:
        err += abs(val.imag)
        val = complex(val.real, 0.0)
    return EvalResult(val, err, gm.terms_used + gp.terms_used + g0.terms_used,
                      gm.flags | gp.flags | g0.flags)


def phased_difference(u: complex, x: float, p: SeriesParams = DEFAULT_PARAMS, route: str = "auto") -> EvalResult:
    """e^{i pi u} G(x e^{-i pi}) - e^{-i pi u} G(x e^{i pi})."""
    u = complex(u)
    gm = meijer_g_0331(u, x, -1, p, route)
    gp = meijer_g_0331(u, x, +1, p, route)
    em = cmath.exp(1j * math.pi * u)
    val = em * gm.value - gp.value / em
    err = abs(em) * gm.abs_error_estimate + gp.abs_error_estimate / abs(em)
    return EvalResult(val, err, gm.terms_used + gp.terms_used, gm.flags | gp.flags)


# ---------------------------------------------------------------- Bessel moment

BESSEL_SERIES_MAX_X = 16.0


def bessel_tail(u: complex, X: float, tol: float = 1e-15) -> EvalResult:
    """Integral of t^-u J0(2 sqrt t) over [X, oo) (Abel-regularised for Re u <= 1/4)."""
    u = complex(u)
    R = 2.0 * math.sqrt(X)
    mu = 1 - 2 * u
    c = 2.0 ** (2 * u - 1)
    h1 = hankel_power_tail(mu, R, +1, tol)
    h2 = hankel_power_tail(mu, R, -1, tol)
    val = 0.5 * c * (h1.value + h2.value)
    err = 0.5 * abs(c) * (h1.abs_error_estimate + h2.abs_error_estimate)
    if u.imag == 0:
        val = complex(val.real, 0.0)
    flags = frozenset({Flag.REGULARIZED}) if u.real <= 0.25 else frozenset()
    return EvalResult(val, err, h1.terms_used + h2.terms_used, flags)


def _moment_constant(u: complex, N):
    # the X-independent part of the continued integral
    if N is not None:
        return (-1) ** (N - 1) * 2 * digamma_int(N) / math.factorial(N - 1) ** 2
    rg = reciprocal_gamma(u)
    return complex_gamma(1 - u) * rg if rg else 0j


def _moment_series(u: complex, X: float, N, p: SeriesParams) -> EvalResult:
    lx = math.log(X)
    total = 0j
    biggest = 0.0
    last = 0.0
    k = 0
    for k in range(p.max_terms):
        sign = -1 if k % 2 else 1
        if N is not None and k == N - 1:
            term = sign * lx / math.factorial(k) ** 2
        else:
            e = k + 1 - u
            term = sign * cmath.exp(e * lx - 2 * math.lgamma(k + 1)) / e
        total += term
        mag = abs(term)
        biggest = max(biggest, mag)
        last = mag
        if k > X and mag <= 0.1 * p.tolerance * max(1.0, abs(total)):
            break
    else:
        return EvalResult(total, last + 8 * _EPS * biggest, p.max_terms, frozenset({Flag.TRUNCATED}))
    return EvalResult(total, last + 32 * _EPS * biggest * (k + 1) ** 0.5, k + 1)


def bessel_moment(u: complex, X: float, p: SeriesParams = DEFAULT_PARAMS) -> EvalResult:
    """Integral of t^-u J0(2 sqrt t) over (0, X].

    For Re u < 1 this is the convergent integral. For Re u >= 1 the value is
    the meromorphic continuation in u of the term-wise series
    sum_k (-1)^k X^(k+1-u) / ((k!)^2 (k+1-u)); at a positive integer u = N the
    pole term k = N-1 is replaced by its finite part (-1)^(N-1) ln X/((N-1)!)^2.
    Both cases carry the Regularized flag.

    For X above 16 the series cancels badly, so the value is assembled as
    c(u) - integral over [X, oo), with c(u) = Gamma(1-u)/Gamma(u) or, at u = N,
    its finite part (-1)^(N-1) 2 psi(N)/((N-1)!)^2.
    """
    u = complex(u)
    X = float(X)
    if not X > 0:
        raise ConstraintViolation("bessel_moment needs X > 0")
    N = round(u.real) if (u.imag == 0 and u.real == round(u.real) and u.real >= 1) else None
    flags = {Flag.REGULARIZED} if u.real >= 1 else set()
    if X <= BESSEL_SERIES_MAX_X:
        r = _moment_series(u, X, N, p)
    else:
        t = bessel_tail(u, X, min(p.tolerance, 1e-15))
        c = _moment_constant(u, N)
        r = EvalResult(c - t.value, t.abs_error_estimate + 4 * _EPS * abs(c), t.terms_used, t.flags - {Flag.REGULARIZED})
    val = r.value
    if u.imag == 0:
        val = complex(val.real, 0.0)
    return EvalResult(val, r.abs_error_estimate, r.terms_used, r.flags | frozenset(flags))
