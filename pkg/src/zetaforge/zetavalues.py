"""Riemann, Dirichlet and Dedekind zeta values by several independent routes.

Routes:
    direct series   Euler-Maclaurin for zeta and Hurwitz zeta, truncated ideal sums
    factored        zeta_K(s) = zeta(s) L(s, chi_D)
    closed form     Bernoulli / generalized Bernoulli expressions, Ramanujan-type
                    Lambert series for odd zeta values
    zagier          zeta_K(2) of an imaginary quadratic field from A(x)
    wilton-derived  solving the product identities for a single zeta value
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arithmetic import as_disc, character_table, field_invariants, ideal_counts, sigma_prime_table
from .exactnum import bernoulli_number, gauss_sum, generalized_bernoulli
from .specialfn.core import DEFAULT_PARAMS, ConstraintViolation, Flag, SeriesParams
from .specialfn.meijer import bessel_moment, bessel_tail, meijer_g_0331, wilton_g_combo
from .specialfn.zagier import zagier_A_result

__all__ = [
    "Route",
    "ZetaValue",
    "CLCoefficients",
    "riemann_zeta",
    "riemann_zeta_direct",
    "riemann_zeta_even",
    "hurwitz_zeta",
    "dirichlet_L_direct",
    "dirichlet_L_even_closed",
    "dirichlet_L_odd_closed",
    "dedekind_zeta_direct",
    "dedekind_zeta_factored",
    "dedekind_zeta_continued",
    "dedekind_zeta_even_real_closed",
    "ramanujan_S",
    "ramanujan_identity_check",
    "cl_coefficients",
    "zeta_odd_closed",
    "dedekind_zeta_odd_imaginary",
    "zagier_zeta2_imaginary",
    "dedekind_zeta_odd_real_wilton",
    "dedekind_zeta_even_imaginary_wilton",
]

_EPS = 2.220446049250313e-16
_EULER_GAMMA = 0.5772156649015329


class Route(enum.Enum):
    DIRECT_SERIES = "DirectSeries"
    FACTORED = "Factored"
    CLOSED_FORM = "ClosedForm"
    ZAGIER = "Zagier"
    WILTON_DERIVED = "WiltonDerived"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ZetaValue:
    value: complex
    route: Route
    error_estimate: float
    flags: frozenset = frozenset()
    terms_used: int = 0
    exact_coefficient: Fraction | None = None
    details: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def real(self) -> float:
        return self.value.real


def _real_if(s: complex, v: complex) -> complex:
    return complex(v.real, 0.0) if complex(s).imag == 0 else complex(v)


# ------------------------------------------------------------- Euler-Maclaurin

_EM_ORDER = 18
_EM_B = [float(bernoulli_number(2 * k)) / math.factorial(2 * k) for k in range(_EM_ORDER + 2)]


def _em_tail(s: complex, base: np.ndarray):
    """Euler-Maclaurin correction for sum_{n >= 0} (base + n)^-s, omitting the integral.

    Returns (corrections, error bound) elementwise over ``base``.
    """
    lb = np.log(base)
    pw = np.exp(-s * lb)  # base^-s
    total = pw / 2
    poch = s  # (s)_{2k-1}
    err = np.zeros_like(base, dtype=float)
    for k in range(1, _EM_ORDER + 1):
        t = _EM_B[k] * poch * pw * base ** (1 - 2 * k)
        total = total + t
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
    nxt = np.abs(_EM_B[_EM_ORDER + 1] * poch * pw * base ** (-1 - 2 * _EM_ORDER))
    sig = s.real + 2 * _EM_ORDER + 1
    err = nxt * (abs(s + 2 * _EM_ORDER + 1) / sig if sig > 0 else 1.0) * 2
    return total, err


def _em_cutoff(s: complex) -> int:
    return int(30 + abs(s))


def hurwitz_zeta_star(s: complex, a: np.ndarray):
    """zeta(s, a) - 1/(s - 1), finite at s = 1, vectorised over a in (0, 1]."""
    s = complex(s)
    a = np.atleast_1d(np.asarray(a, dtype=float))
    N = _em_cutoff(s)
    n = np.arange(N)[:, None]
    head = np.sum(np.exp(-s * np.log(n + a[None, :])), axis=0)
    base = a + N
    corr, err = _em_tail(s, base)
    lb = np.log(base)
    # (base^{1-s} - 1)/(s - 1) without cancellation near s = 1
    w = (1 - s) * lb
    if abs(s - 1) < 1e-8:
        integral = -lb * (1 + w / 2)
    else:
        integral = np.expm1(w) / (s - 1) if s.imag == 0 else (np.exp(w) - 1) / (s - 1)
    total = head + corr + integral
    rnd = 4 * _EPS * (np.abs(head) + np.abs(integral) + N)
    return total, err + rnd


def hurwitz_zeta(s: complex, a: float) -> ZetaValue:
    s = complex(s)
    if s == 1:
        raise ConstraintViolation("Hurwitz zeta has a pole at s = 1")
    v, e = hurwitz_zeta_star(s, [a])
    return ZetaValue(_real_if(s, v[0] + 1 / (s - 1)), Route.DIRECT_SERIES, float(e[0]))


def riemann_zeta(s: complex) -> ZetaValue:
    """zeta(s) for any s != 1 by Euler-Maclaurin summation.

    Accurate to near machine precision for Re s > -20 and moderate Im s.
    """
    s = complex(s)
    if s == 1:
        raise ConstraintViolation("zeta has a pole at s = 1")
    v, e = hurwitz_zeta_star(s, [1.0])
    return ZetaValue(_real_if(s, v[0] + 1 / (s - 1)), Route.DIRECT_SERIES, float(e[0]), terms_used=_em_cutoff(s))


def riemann_zeta_direct(s: complex, p: SeriesParams = DEFAULT_PARAMS) -> ZetaValue:
    """sum of m^-s with an Euler-Maclaurin tail; Re s > 1 only."""
    s = complex(s)
    if s.real <= 1:
        raise ConstraintViolation("riemann_zeta_direct needs Re s > 1")
    return riemann_zeta(s)


def zeta_even_coefficient(n: int) -> Fraction:
    """Rational r with zeta(2n) = r * pi^(2n)."""
    if n < 1:
        raise ConstraintViolation("n must be >= 1")
    return (-1) ** (n + 1) * bernoulli_number(2 * n) * 2 ** (2 * n) / (2 * math.factorial(2 * n))


def riemann_zeta_even(n: int) -> ZetaValue:
    r = zeta_even_coefficient(n)
    v = float(r) * math.pi ** (2 * n)
    return ZetaValue(complex(v), Route.CLOSED_FORM, 4 * _EPS * v, exact_coefficient=r)


# ---------------------------------------------------------------- L-functions

def _dirichlet_L(D, s: complex) -> ZetaValue:
    # no domain check: the Euler-Maclaurin head is valid well left of Re s = 0
    chi = character_table(D)
    f = chi.modulus
    a = np.nonzero(chi.values)[0]
    c = chi.values[a].astype(float)
    z, e = hurwitz_zeta_star(s, a / f)
    scale = cmath.exp(-s * math.log(f))
    val = scale * np.dot(c, z)
    err = abs(scale) * (float(np.sum(e)) + 4 * _EPS * float(np.sum(np.abs(z))))
    return ZetaValue(_real_if(s, val), Route.DIRECT_SERIES, err, terms_used=len(a) * _em_cutoff(s))


def dirichlet_L_direct(D, s: complex, p: SeriesParams = DEFAULT_PARAMS) -> ZetaValue:
    """L(s, chi_D) = f^-s * sum_a chi(a) zeta(s, a/f), valid for Re s > 0.

    Uses zeta(s, a) - 1/(s-1) in place of zeta(s, a); the pole parts cancel
    because the character sums to zero over a period.
    """
    D = as_disc(D)
    s = complex(s)
    if s.real <= 0:
        raise ConstraintViolation("dirichlet_L_direct needs Re s > 0")
    return _dirichlet_L(D, s)


def dedekind_zeta_continued(D, s: complex) -> ZetaValue:
    """zeta(s) * L(s, chi_D) for any s != 1 with Re s > -20; ``D = None`` gives zeta(s)."""
    s = complex(s)
    z = riemann_zeta(s)
    if D is None:
        return z
    L = _dirichlet_L(as_disc(D), s)
    err = abs(z.value) * L.error_estimate + abs(L.value) * z.error_estimate
    return ZetaValue(z.value * L.value, Route.FACTORED, err, terms_used=z.terms_used + L.terms_used)


def _closed(value: float, exact=None) -> ZetaValue:
    return ZetaValue(complex(value), Route.CLOSED_FORM, 8 * _EPS * abs(value), exact_coefficient=exact)


def dirichlet_L_even_closed(D, n: int) -> ZetaValue:
    """L(2n, chi) = (-1)^(n+1) (tau/2) (2 pi/f)^(2n) B_{2n,chi}/(2n)! for even chi."""
    D = as_disc(D)
    if D.value < 0:
        raise ConstraintViolation("even-argument closed form needs an even character (D > 0)")
    if n < 1:
        raise ConstraintViolation("n must be >= 1")
    f = D.modulus
    tau = gauss_sum(D).exact.real
    r = (-1) ** (n + 1) * generalized_bernoulli(D, 2 * n) / (2 * math.factorial(2 * n))
    return _closed(float(r) * tau * (2 * math.pi / f) ** (2 * n), r)


def dirichlet_L_odd_closed(D, n: int) -> ZetaValue:
    """L(2n+1, chi) = (-1)^(n+1) (tau/2i) (2 pi/f)^(2n+1) B_{2n+1,chi}/(2n+1)! for odd chi."""
    D = as_disc(D)
    if D.value > 0:
        raise ConstraintViolation("odd-argument closed form needs an odd character (D < 0)")
    if n < 0:
        raise ConstraintViolation("n must be >= 0")
    f = D.modulus
    tau_over_i = gauss_sum(D).exact.imag  # tau = i sqrt|D|
    r = (-1) ** (n + 1) * generalized_bernoulli(D, 2 * n + 1) / (2 * math.factorial(2 * n + 1))
    return _closed(float(r) * tau_over_i * (2 * math.pi / f) ** (2 * n + 1), r)


# ---------------------------------------------------------------- Dedekind zeta

_DIRECT_CAP = 2_000_000


def _divisor_tail_bound(sigma: float, M: int) -> float:
    # sum_{m > M} d(m) m^-sigma via partial summation with
    # sum_{m <= x} d(m) = x log x + (2 gamma - 1) x + Delta(x), |Delta(x)| <= sqrt(x)
    c = 2 * _EULER_GAMMA - 1
    lm = math.log(M)
    s1 = sigma - 1
    integral = sigma * (
        M ** (-s1) * (lm / s1 + 1 / s1**2)
        + c * M ** (-s1) / s1
        + M ** (0.5 - sigma) / (sigma - 0.5)
    )
    boundary = -(M * lm + c * M - math.sqrt(M)) * M ** (-sigma)
    return integral + boundary


def dedekind_zeta_direct(D, s: complex, p: SeriesParams = DEFAULT_PARAMS, M: int | None = None) -> ZetaValue:
    """Truncated sum of v_K(m) m^-s; the error estimate bounds the omitted tail by sum d(m) m^-Re s."""
    D = as_disc(D)
    s = complex(s)
    if s.real <= 1:
        raise ConstraintViolation("dedekind_zeta_direct needs Re s > 1")
    if M is None:
        M = 1000
        while M < _DIRECT_CAP and _divisor_tail_bound(s.real, M) > p.tolerance:
            M *= 2
        M = min(M, _DIRECT_CAP)
    v = ideal_counts(D, M)
    m = np.arange(1, M + 1, dtype=float)
    if s.imag == 0:
        terms = v[1:] * m ** -s.real
    else:
        terms = v[1:] * np.exp(-s * np.log(m))
    val = complex(np.sum(terms[::-1]))  # small terms first
    err = _divisor_tail_bound(s.real, M) + 4 * _EPS * float(np.sum(np.abs(terms)))
    flags = frozenset({Flag.TRUNCATED})
    return ZetaValue(_real_if(s, val), Route.DIRECT_SERIES, err, flags, M)


def dedekind_zeta_factored(D, s: complex, p: SeriesParams = DEFAULT_PARAMS) -> ZetaValue:
    """zeta(s) * L(s, chi_D), valid wherever both factors are (Re s > 0, s != 1)."""
    D = as_disc(D)
    z = riemann_zeta(s)
    L = dirichlet_L_direct(D, s, p)
    val = z.value * L.value
    err = abs(z.value) * L.error_estimate + abs(L.value) * z.error_estimate
    return ZetaValue(val, Route.FACTORED, err, terms_used=z.terms_used + L.terms_used)


def dedekind_zeta_even_real_closed(D, n: int) -> ZetaValue:
    """zeta_K(2n) = tau (2 pi)^(4n) B_{2n} B_{2n,chi} / (4 ((2n)!)^2 D^(2n)) for D > 0."""
    D = as_disc(D)
    if D.value < 0:
        raise ConstraintViolation("real-field closed form needs D > 0")
    if n < 1:
        raise ConstraintViolation("n must be >= 1")
    d = D.value
    r = bernoulli_number(2 * n) * generalized_bernoulli(D, 2 * n) / (4 * math.factorial(2 * n) ** 2 * Fraction(d) ** (2 * n))
    tau = gauss_sum(D).exact.real
    return _closed(float(r) * tau * (2 * math.pi) ** (4 * n), r)


# ------------------------------------------------------- odd zeta values

def ramanujan_S(n: int, r: float, p: SeriesParams = DEFAULT_PARAMS) -> ZetaValue:
    """S_n(r) = sum_{k >= 1} 1/(k^n (exp(pi r k) - 1))."""
    if n < 1:
        raise ConstraintViolation("n must be >= 1")
    if not r > 0:
        raise ConstraintViolation("r must be positive")
    terms = []
    k = 0
    for k in range(1, p.max_terms + 1):
        t = 1.0 / (k**n * math.expm1(math.pi * r * k))
        terms.append(t)
        if t < 1e-3 * p.tolerance * terms[0]:
            break
    total = math.fsum(terms)
    # remaining terms decay at least geometrically with ratio exp(-pi r)
    q = math.exp(-math.pi * r)
    last = terms[-1] * q / (1 - q)
    flags = frozenset({Flag.TRUNCATED}) if k == p.max_terms else frozenset()
    return ZetaValue(complex(total), Route.CLOSED_FORM, last + 2 * _EPS * total, flags, k)


def _lambert(n: int, alpha: float) -> float:
    # sum k^-n / (exp(2 alpha k) - 1)
    return ramanujan_S(n, 2 * alpha / math.pi).real


def ramanujan_identity_check(n: int, alpha: float) -> float:
    """|LHS - RHS| of Ramanujan's formula for zeta(2n+1), alpha * beta = pi^2.

    Both Lambert series use exp(2 alpha k) and exp(2 beta k); zeta(2n+1) comes
    from Euler-Maclaurin.
    """
    if n < 1:
        raise ConstraintViolation("n must be >= 1")
    beta = math.pi**2 / alpha
    z = riemann_zeta_direct(2 * n + 1).real
    lhs = alpha ** (-n) * (0.5 * z + _lambert(2 * n + 1, alpha))
    poly = math.fsum(
        (-1) ** k
        * float(bernoulli_number(2 * k) * bernoulli_number(2 * n + 2 - 2 * k))
        / (math.factorial(2 * k) * math.factorial(2 * n + 2 - 2 * k))
        * alpha ** (n + 1 - k)
        * beta**k
        for k in range(n + 2)
    )
    rhs = (-beta) ** (-n) * (0.5 * z + _lambert(2 * n + 1, beta)) - 2 ** (2 * n) * poly
    return abs(lhs - rhs)


def _bern_pair_sum(m: int, weight: int) -> Fraction:
    # sum_{k=0}^{m+1} weight^k B_2k B_{2m+2-2k} / ((2k)! (2m+2-2k)!)
    return sum(
        (Fraction(weight) ** k * bernoulli_number(2 * k) * bernoulli_number(2 * m + 2 - 2 * k)
         / (math.factorial(2 * k) * math.factorial(2 * m + 2 - 2 * k)) for k in range(m + 2)),
        Fraction(0),
    )


def cl_F(m: int) -> Fraction:
    return _bern_pair_sum(m, -1)


def cl_G(m: int) -> Fraction:
    return _bern_pair_sum(m, -4)


@dataclass(frozen=True)
class CLCoefficients:
    """Exact rational data for the Lambert-series formulas for zeta(4m -/+ 1).

    ``F`` and ``G`` hold F_{2m-1} and G_{2m-1} (used for zeta(4m-1));
    ``G2m`` holds G_{2m} (used for zeta(4m+1)).
    """

    index_m: int
    F: Fraction
    G: Fraction
    G2m: Fraction
    Dm: Fraction
    Km: Fraction
    Em: Fraction
    Hm: Fraction

    def minus_weights(self) -> tuple[Fraction, Fraction, Fraction]:
        """Weights of S(1), S(2), S(4) in zeta(4m-1)."""
        m, F, G, D = self.index_m, self.F, self.G, self.Dm
        return (-F * 4 ** (4 * m - 2) / D, G * 4 ** (2 * m - 1) / D, -F * 4 ** (2 * m - 1) / D)

    def plus_weights(self) -> tuple[Fraction, Fraction, Fraction]:
        """Weights of S(1), S(2), S(4) in zeta(4m+1)."""
        m, G, K, E = self.index_m, self.G2m, self.Km, self.Em
        q = Fraction(16) ** m
        den = (q - 1) * E
        c1 = q * (q * G - 2 * E) / den
        c2 = -2 * G * K * q * (2 * q - Fraction(-4) ** m + 1) / den
        c3 = (2 * E + 4 * q * G * K - q * G) / den
        return c1, c2, c3

    def plus_weights_as_printed(self) -> tuple[Fraction, Fraction, Fraction]:
        """The zeta(4m+1) weights in their widely circulated form; kept for comparison only."""
        m, G, K, E = self.index_m, self.G2m, self.Km, self.Em
        q = Fraction(16) ** m
        den = (q - 1) * E
        H = sum(
            (Fraction(-4) ** (m + k) * bernoulli_number(4 * m) * bernoulli_number(4 * m + 2 - 4 * k)
             / (math.factorial(4 * k) * math.factorial(4 * m + 2 - 4 * k)) for k in range(m + 1)),
            Fraction(0),
        )
        E2 = Fraction(4) ** (2 * m) / 2 * G - 2 ** (4 * m + 1) * K * H - 2 ** (4 * m) * K * G
        den = (q - 1) * E2
        c1 = -(q * (G * q) + 2 * E2) / den
        c2 = -2 * G * K * q * (2 * q - Fraction(-4) ** m + 1) / den
        c3 = -(G * q + 4 * G * q * K + 2 * E2) / den
        return c1, c2, c3


def cl_coefficients(m: int) -> CLCoefficients:
    if m < 1:
        raise ConstraintViolation("m must be >= 1")
    F = cl_F(2 * m - 1)
    G = cl_G(2 * m - 1)
    G2 = cl_G(2 * m)
    Dm = Fraction(4) ** (2 * m - 1) * ((Fraction(4) ** (2 * m - 1) + 1) * F - G) / 2
    Km = Fraction(1 - 4 ** (2 * m), 2) / (1 + (-4) ** m - 2 ** (4 * m + 1))
    # the k-th term pairs B_{4k} with B_{4m+2-4k}
    Hm = sum(
        (Fraction(-4) ** (m + k) * bernoulli_number(4 * k) * bernoulli_number(4 * m + 2 - 4 * k)
         / (math.factorial(4 * k) * math.factorial(4 * m + 2 - 4 * k)) for k in range(m + 1)),
        Fraction(0),
    )
    Em = Fraction(4) ** (2 * m) / 2 * G2 - 2 ** (4 * m + 1) * Km * Hm - 2 ** (4 * m) * Km * G2
    return CLCoefficients(m, F, G, G2, Dm, Km, Em, Hm)


def zeta_odd_closed(n: int, p: SeriesParams = DEFAULT_PARAMS) -> ZetaValue:
    """zeta(n), n odd >= 3, as a rational combination of S_n(1), S_n(2), S_n(4)."""
    if n < 3 or n % 2 == 0:
        raise ConstraintViolation("n must be odd and >= 3")
    if n % 4 == 3:
        cl = cl_coefficients((n + 1) // 4)
        w = cl.minus_weights()
    else:
        cl = cl_coefficients((n - 1) // 4)
        w = cl.plus_weights()
    S = [ramanujan_S(n, r, p) for r in (1, 2, 4)]
    parts = [float(c) * s.real for c, s in zip(w, S)]
    val = math.fsum(parts)
    err = sum(abs(float(c)) * s.error_estimate for c, s in zip(w, S)) + 4 * _EPS * sum(map(abs, parts))
    return ZetaValue(complex(val), Route.CLOSED_FORM, err, terms_used=sum(s.terms_used for s in S))


def dedekind_zeta_odd_imaginary(D, n: int, p: SeriesParams = DEFAULT_PARAMS) -> ZetaValue:
    """zeta_K(n) = zeta(n) L(n, chi_D) for D < 0 and odd n >= 3, both factors in closed form."""
    D = as_disc(D)
    if D.value > 0:
        raise ConstraintViolation("needs an imaginary quadratic field (D < 0)")
    z = zeta_odd_closed(n, p)
    L = dirichlet_L_odd_closed(D, (n - 1) // 2)
    val = z.value * L.value
    return ZetaValue(val, Route.CLOSED_FORM, abs(L.value) * z.error_estimate + abs(z.value) * L.error_estimate)


def zagier_zeta2_imaginary(D) -> ZetaValue:
    """zeta_K(2) = pi^2/(6 sqrt|D|) * sum_{0<n<|D|} chi(n) A(cot(pi n/|D|))."""
    D = as_disc(D)
    if D.value > 0:
        raise ConstraintViolation("the geometric formula needs D < 0")
    chi = character_table(D)
    f = chi.modulus
    vals, errs = [], 0.0
    for n in range(1, f):
        c = int(chi.values[n])
        if not c:
            continue
        r = zagier_A_result(1.0 / math.tan(math.pi * n / f))
        vals.append(c * r.value.real)
        errs += r.abs_error_estimate
    pref = math.pi**2 / (6 * math.sqrt(f))
    total = math.fsum(vals)
    err = pref * (errs + 4 * _EPS * sum(map(abs, vals)))
    return ZetaValue(complex(pref * total), Route.ZAGIER, err)


# ------------------------------------------------------- identity-derived values

def window_mean(partial: np.ndarray, M: int | None = None) -> tuple[complex, float]:
    """Mean of the partial sums S_m over M/2 < m <= M, with a tail estimate.

    The estimate is twice the change since the same mean at M/2, plus the
    largest term in the window.
    """
    M = len(partial) if M is None else M
    value = complex(np.mean(partial[M // 2:M]))
    if M < 2:
        return value, math.inf
    prev = complex(np.mean(partial[M // 4:M // 2]))
    terms = np.diff(partial[M // 2 - 1:M])
    return value, 2.0 * abs(value - prev) + float(np.max(np.abs(terms)))


def dedekind_zeta_odd_real_wilton(D, n: int, p: SeriesParams = DEFAULT_PARAMS, M: int = 200,
                                  include_series: bool = True, form: str = "combo") -> ZetaValue:
    """zeta_K(2n+1) for D > 0 from the product identity at (u, v) = (2, 2n+1).

    zeta_K(2) zeta_K(2n+1) = 4C (1 + 1/(2n)) zeta_K(2n+2) - S_2 - S_{2n+1}, with
    C = h R/(w sqrt D), zeta_K(2n+2) in closed form and

        S_u = 2 (2 pi)^(2u-2) D^((1-2u)/2) sum_m sigma'_{-2n-2}(m) m^(u-1) W_u(D/(4 pi^2 m)),

    W_u being ``wilton_g_combo``. ``form="printed"`` replaces W_u by
    -(P + Q + 2R) for both series (P, Q, R the G-values at phases -1, +1, 0);
    it differs from the combo in the second series, where e^{i pi u} = -1.
    ``form="corrected"`` uses + S_2/2 + S_{2n+1}/2 instead, the normalisation
    under which the value approaches the direct series.

    The series are summed as window means of their partial sums.
    """
    D = as_disc(D)
    if D.value < 0:
        raise ConstraintViolation("needs a real quadratic field (D > 0)")
    if n < 1:
        raise ConstraintViolation("n must be >= 1")
    if form not in ("combo", "printed", "corrected"):
        raise ConstraintViolation(f"unknown form {form!r}")
    d = D.value
    inv = field_invariants(D)
    C = inv.class_number * inv.regulator / (inv.w * math.sqrt(d))
    z2 = dedekind_zeta_even_real_closed(D, 1)
    zc = dedekind_zeta_even_real_closed(D, n + 1)
    const = 4 * C * (1 + 1 / (2 * n)) * zc.real
    details = {"constant_term": const / z2.real, "form": form}
    if not include_series:
        return ZetaValue(complex(const / z2.real), Route.WILTON_DERIVED, zc.error_estimate, details=details)
    sig = sigma_prime_table(D, -2 * n - 2, M).real
    sign = 0.5 if form == "corrected" else -1.0
    total = 0.0
    err = 0.0
    tails = 0.0
    flags = set()
    logs = {}
    for u in (2, 2 * n + 1):
        pref = 2 * (2 * math.pi) ** (2 * u - 2) * d ** ((1 - 2 * u) / 2)
        terms = np.zeros(M)
        werr = 0.0
        for m in range(1, M + 1):
            if sig[m] == 0:
                continue
            x = d / (4 * math.pi**2 * m)
            if form == "printed":
                P = meijer_g_0331(u, x, -1, p)
                Q = meijer_g_0331(u, x, +1, p)
                R = meijer_g_0331(u, x, 0, p)
                wv = -(P.value + Q.value + 2 * R.value).real
                flags |= P.flags | Q.flags | R.flags
                werr += abs(pref * sig[m] * m ** (u - 1)) * (P.abs_error_estimate + Q.abs_error_estimate
                                                            + 2 * R.abs_error_estimate)
            else:
                w = wilton_g_combo(u, x, p)
                wv = w.value.real
                flags |= w.flags
                werr += abs(pref * sig[m] * m ** (u - 1)) * w.abs_error_estimate
            terms[m - 1] = sign * pref * sig[m] * m ** (u - 1) * wv
        mean, tail = window_mean(np.cumsum(terms))
        total += mean.real
        err += werr
        tails += tail
        logs[u] = terms
        details[f"series_u{u}"] = mean.real / z2.real
    val = (const + total) / z2.real
    est = (err + tails) / z2.real + zc.error_estimate + abs(val) * z2.error_estimate / z2.real
    flags.add(Flag.TRUNCATED)
    details["terms"] = logs
    details["M"] = M
    return ZetaValue(complex(val), Route.WILTON_DERIVED, est, frozenset(flags), M, details=details)


def dedekind_zeta_even_imaginary_wilton(D, n: int, p: SeriesParams = DEFAULT_PARAMS, M: int = 200,
                                        include_series: bool = True, form: str = "printed") -> ZetaValue:
    """zeta_K(2n) for D < 0 from the product identity at (u, v) = (2, 2n).

    zeta_K(2) zeta_K(2n) = c (1 + 1/(2n-1)) zeta_K(2n+1) - T_2 - T_{2n}, with c the
    residue 2 pi h/(w sqrt|D|) and

        T_u = (2 pi)^(2u-1) |D|^((1-2u)/2) sum_m sigma'_{1-2-2n}(m) m^(u-1) BM(u, 4 pi^2 m/|D|),

    BM the (regularised) Bessel moment over [0, X]. Those moments tend to a
    nonzero constant as m grows, so with ``form="printed"`` the series diverge;
    the result is flagged Divergent and its error estimate is infinite.
    ``form="corrected"`` adds the series with the tail moment over [X, oo)
    in place of BM; they converge on average.
    """
    D = as_disc(D)
    if D.value > 0:
        raise ConstraintViolation("needs an imaginary quadratic field (D < 0)")
    if n < 2:
        raise ConstraintViolation("n must be >= 2")
    if form not in ("printed", "corrected"):
        raise ConstraintViolation(f"unknown form {form!r}")
    f = D.modulus
    inv = field_invariants(D)
    z2 = zagier_zeta2_imaginary(D)
    zo = dedekind_zeta_odd_imaginary(D, 2 * n + 1, p)
    const = inv.residue * (1 + 1 / (2 * n - 1)) * zo.real
    details = {"constant_term": const / z2.real, "form": form}
    if not include_series:
        return ZetaValue(complex(const / z2.real), Route.WILTON_DERIVED, zo.error_estimate, details=details)
    sig = sigma_prime_table(D, -1 - 2 * n, M).real
    total = 0.0
    err = 0.0
    tails = 0.0
    flags = {Flag.TRUNCATED}
    logs = {}
    for u in (2, 2 * n):
        pref = (2 * math.pi) ** (2 * u - 1) * f ** ((1 - 2 * u) / 2)
        terms = np.zeros(M)
        for m in range(1, M + 1):
            if sig[m] == 0:
                continue
            X = 4 * math.pi**2 * m / f
            if form == "printed":
                b = bessel_moment(u, X, p)
                c = -pref * sig[m] * m ** (u - 1)
            else:
                b = bessel_tail(u, X, p.tolerance * 1e-2)
                c = pref * sig[m] * m ** (u - 1)
            flags |= b.flags
            terms[m - 1] = c * b.value.real
            err += abs(c) * b.abs_error_estimate
        logs[u] = terms
        if form == "printed":
            total += terms.sum()
        else:
            mean, tail = window_mean(np.cumsum(terms))
            total += mean.real
            tails += tail
    details["terms"] = logs
    details["M"] = M
    val = (const + total) / z2.real
    if form == "printed":
        flags.add(Flag.DIVERGENT)
        est = math.inf
    else:
        est = (err + tails) / z2.real + zo.error_estimate + abs(val) * z2.error_estimate / z2.real
    return ZetaValue(complex(val), Route.WILTON_DERIVED, est, frozenset(flags), M, details=details)
