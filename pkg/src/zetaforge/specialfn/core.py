"""Shared result types, the complex gamma function and J0."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Flag",
    "SeriesParams",
    "EvalResult",
    "ConstraintViolation",
    "complex_gamma",
    "complex_loggamma",
    "reciprocal_gamma",
    "digamma_int",
    "trigamma_int",
    "bessel_j0",
    "bessel_j1",
]


class ConstraintViolation(ValueError):
    """Raised when an argument lies outside the domain a routine supports."""


class Flag(enum.Enum):
    TRUNCATED = "Truncated"
    PERTURBED = "Perturbed"
    REGULARIZED = "Regularized"
    DIVERGENT = "Divergent"

    def __str__(self):
        return self.value


def _default_max_terms() -> int:
    import os

    raw = os.environ.get("ZETAFORGE_MAX_TERMS")
    return int(raw) if raw else 400


@dataclass(frozen=True)
class SeriesParams:
    """Truncation controls shared by the series and quadrature routines."""

    max_terms: int = field(default_factory=_default_max_terms)
    tolerance: float = 1e-13
    epsilon_perturb: float = 1e-4
    contour_abscissa: float | None = None

    def __post_init__(self):
        if int(self.max_terms) < 8:
            raise ConstraintViolation("max_terms must be at least 8")
        if not self.tolerance > 0:
            raise ConstraintViolation("tolerance must be positive")
        if not 0 < self.epsilon_perturb <= 1e-2:
            raise ConstraintViolation("epsilon_perturb must lie in (0, 1e-2]")


DEFAULT_PARAMS = SeriesParams()


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_estimate: float
    terms_used: int = 0
    flags: frozenset = frozenset()

    def __iter__(self):
        # allows ``value, err = result`` unpacking in quick scripts
        yield self.value
        yield self.abs_error_estimate

    @property
    def real(self) -> float:
        return float(np.real(self.value))


_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def complex_loggamma(z: complex) -> complex:
    """log Gamma(z), Lanczos approximation (g = 7) with reflection.

    The imaginary part is not reduced to the principal branch.
    """
    z = complex(z)
    if z.real < 0.5:
        if z.imag == 0 and z.real == math.floor(z.real):
            raise ConstraintViolation(f"Gamma has a pole at {z.real:g}")
        return cmath.log(math.pi) - _log_sin_pi(z) - complex_loggamma(1 - z)
    z -= 1
    x = _LANCZOS[0]
    for i in range(1, 9):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def _sin_pi(z: complex) -> complex:
    # reduce first so that sin(pi z) keeps full relative accuracy near integers
    n = round(z.real)
    w = z - n
    v = cmath.sin(math.pi * w)
    return -v if n % 2 else v


def _log_sin_pi(z: complex) -> complex:
    # log sin(pi z) without overflow for large |Im z|
    y = z.imag
    if abs(y) < 20:
        return cmath.log(_sin_pi(z))
    # sin(pi z) = (e^{i pi z} - e^{-i pi z})/(2i); keep the dominant exponential
    sgn = 1.0 if y > 0 else -1.0
    w = cmath.exp(2j * math.pi * z * sgn)
    return -1j * math.pi * z * sgn + cmath.log((1 - w) / (2j * -sgn))


def complex_gamma(z: complex) -> complex:
    z = complex(z)
    if z.imag == 0 and abs(z.real) < 171:
        if z.real <= 0 and z.real == math.floor(z.real):
            raise ConstraintViolation(f"Gamma has a pole at {z.real:g}")
        return complex(math.gamma(z.real))
    return cmath.exp(complex_loggamma(z))


def reciprocal_gamma(z: complex) -> complex:
    """1/Gamma(z), entire; zero at the nonpositive integers."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        return 0j
    if z.imag == 0 and abs(z.real) < 171:
        return complex(1.0 / math.gamma(z.real))
    return cmath.exp(-complex_loggamma(z))


_EULER_GAMMA = 0.5772156649015329


def digamma_int(n: int) -> float:
    """psi(n) for a positive integer n."""
    if n < 1:
        raise ConstraintViolation("digamma_int needs n >= 1")
    return math.fsum([1.0 / k for k in range(1, n)]) - _EULER_GAMMA


def trigamma_int(n: int) -> float:
    """psi'(n) for a positive integer n."""
    if n < 1:
        raise ConstraintViolation("trigamma_int needs n >= 1")
    return math.pi**2 / 6 - math.fsum([1.0 / (k * k) for k in range(1, n)])


def _j_series(nu: int, x):
    x = np.asarray(x, dtype=float)
    q = -(x * x) / 4
    term = (x / 2) ** nu / math.factorial(nu)
    total = term.copy() if isinstance(term, np.ndarray) else term
    for k in range(1, 60):
        term = term * q / (k * (k + nu))
        total = total + term
    return total


def _j_asymptotic(nu: int, x):
    x = np.asarray(x, dtype=float)
    mu = 4.0 * nu * nu
    P = np.ones_like(x)
    Q = np.zeros_like(x)
    term = np.ones_like(x)
    live = np.ones(x.shape, dtype=bool)
    for k in range(1, 40):
        nxt = term * (mu - (2 * k - 1) ** 2) / (k * 8 * x)
        # stop each entry at its smallest term
        live &= np.abs(nxt) < np.abs(term)
        term = np.where(live, nxt, 0.0)
        sgn = 1 if (k // 2) % 2 == 0 else -1
        if k % 2:
            Q = Q + sgn * term
        else:
            P = P + sgn * term
    chi = x - (0.5 * nu + 0.25) * math.pi
    return np.sqrt(2 / (math.pi * x)) * (P * np.cos(chi) - Q * np.sin(chi))


def bessel_j0(x):
    """J_0 by its power series for |x| <= 12 and the Hankel expansion beyond."""
    x = np.abs(np.asarray(x, dtype=float))
    small = x <= 12.0
    out = np.empty_like(x)
    if np.any(small):
        out[small] = _j_series(0, x[small])
    if np.any(~small):
        out[~small] = _j_asymptotic(0, x[~small])
    return out if out.ndim else float(out)


def bessel_j1(x):
    """J_1, same split as ``bessel_j0``."""
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    small = ax <= 12.0
    out = np.empty_like(ax)
    if np.any(small):
        out[small] = _j_series(1, ax[small])
    if np.any(~small):
        out[~small] = _j_asymptotic(1, ax[~small])
    out = np.sign(x) * out
    return out if out.ndim else float(out)
