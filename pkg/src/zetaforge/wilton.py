"""Numerical harness for Wilton-type product formulas.

For K = Q the classical formula writes zeta(u) zeta(v) as a constant term
plus two series of divisor sums against sine tails. For quadratic K the
analogous series use sigma'_{1-u-v} and either the Meijer combination
(real K) or Bessel moments (imaginary K). The left side is always the
product of two independently evaluated zeta factors; the harness measures
the difference and never assumes it vanishes.

Variants
--------
``"printed"``
    The quadratic formulas as usually stated: the real series enters with
    the factor -2 and the imaginary one with the moment over [0, X].
``"corrected"``
    The real series enters with factor +1, and the imaginary one with the
    tail moment over [X, oo) and a plus sign. These are the normalisations
    under which the residual is observed to shrink.

The quadratic series converge slowly and only on average, so the value at
truncation M is the mean of the partial sums S_m over M/2 < m <= M, and
the tail estimate comes from how much that mean moved since M/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arithmetic import as_disc, field_invariants, sigma_prime_table
from .specialfn import (
    ConstraintViolation,
    EvalResult,
    Flag,
    SeriesParams,
    bessel_moment,
    bessel_tail,
    sine_tail_integral,
    wilton_g_combo,
)
from .specialfn.core import DEFAULT_PARAMS
from .zetavalues import dedekind_zeta_continued, riemann_zeta, window_mean

__all__ = [
    "WiltonConstraintError",
    "WiltonReport",
    "VARIANTS",
    "check_constraints",
    "wilton_rhs_rational",
    "wilton_rhs_real_quadratic",
    "wilton_rhs_imaginary_quadratic",
    "verify",
    "convergence_sweep",
    "assess_trend",
]

VARIANTS = ("printed", "corrected")


class WiltonConstraintError(ConstraintViolation):
    """A hypothesis of the product formula is violated; ``hypothesis`` names it."""

    def __init__(self, hypothesis: str):
        super().__init__(f"constraint violated: {hypothesis}")
        self.hypothesis = hypothesis


def check_constraints(u: complex, v: complex) -> None:
    u, v = complex(u), complex(v)
    if u.real <= -1:
        raise WiltonConstraintError("Re u > -1")
    if v.real <= -1:
        raise WiltonConstraintError("Re v > -1")
    if (u + v).real <= 0:
        raise WiltonConstraintError("Re(u+v) > 0")
    if u == 1:
        raise WiltonConstraintError("u ≠ 1")
    if v == 1:
        raise WiltonConstraintError("v ≠ 1")
    if u + v == 2:
        raise WiltonConstraintError("u+v ≠ 2")


@dataclass(frozen=True)
class WiltonReport:
    field_disc: int
    u: complex
    v: complex
    lhs: complex
    rhs: complex
    residual: float
    truncation_M: int
    tail_estimate: float
    per_term_log: np.ndarray | None = field(default=None, repr=False, compare=False)
    flags: frozenset = frozenset()
    rhs_error: float = 0.0
    variant: str = "printed"

    def as_dict(self) -> dict:
        return {
            "field_disc": self.field_disc,
            "u": self.u,
            "v": self.v,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "truncation_M": self.truncation_M,
            "tail_estimate": self.tail_estimate,
            "rhs_error": self.rhs_error,
            "variant": self.variant,
            "flags": sorted(f.value for f in self.flags),
        }


# ------------------------------------------------------------------ series data


@dataclass
class _Series:
    """Everything needed to assemble the right side at any M <= M_max."""

    const: complex
    const_err: float
    terms: np.ndarray  # terms[m-1], both series added, m = 1 .. M_max + 1
    term_err: np.ndarray
    flags: frozenset
    smoothed: bool
    divergent: bool = False
    correction: object = None  # callable M -> (value, partial_sum) for the rational case


def _real_if(u, v, z: complex) -> complex:
    return complex(z.real, 0.0) if complex(u).imag == 0 and complex(v).imag == 0 else complex(z)


def _constant_term(D, residue: float, u: complex, v: complex):
    z = dedekind_zeta_continued(D, u + v - 1)
    k = 1 / (u - 1) + 1 / (v - 1)
    return residue * k * z.value, abs(residue * k) * z.error_estimate


def _rational_series(u: complex, v: complex, M: int, p: SeriesParams) -> _Series:
    N = M + 1
    z = 1 - u - v
    sig = sigma_prime_table(None, z, N)
    terms = np.zeros(N, dtype=complex)
    errs = np.zeros(N)
    flags = set()
    for w in (u, v):
        pref = 2 * (2 * math.pi) ** (w - 1) * w
        for n in range(1, N + 1):
            s = sine_tail_integral(w, 2 * math.pi * n, p.tolerance * 1e-3)
            flags |= s.flags
            c = pref * sig[n] * n ** (w - 1)
            terms[n - 1] += c * s.value
            errs[n - 1] += abs(c) * s.abs_error_estimate
    const, cerr = _constant_term(None, 1.0, u, v)
    S = np.cumsum(sig[1:])
    corr = lambda m: _rational_tail(u, v, m, S[m - 1])
    return _Series(const, cerr, terms, errs, frozenset(flags), smoothed=False, correction=corr)


def _rational_tail(u: complex, v: complex, M: int, S_M: complex) -> complex:
    """Approximate sum over n > M of the two rational series.

    At integer n the sine tail has the expansion (2 pi n)^-(w+1) sum_j (-1)^j (w+1)_{2j} (2 pi n)^-2j,
    so each series is sum_n sigma_z(n) f(n) with f smooth. Abel summation against the mean
    behaviour of sigma_z gives the integral of rho f plus a boundary term from S(M).
    """
    z = 1 - u - v
    if abs(1 + z) < 1e-8 or abs(z) < 1e-8:
        return 0j
    za = riemann_zeta(1 - z).value
    zb = riemann_zeta(1 + z).value
    smooth = za * M + zb * M ** (1 + z) / (1 + z) - riemann_zeta(-z).value / 2
    total = 0j
    for w in (u, v):
        pref = 2 * w / (4 * math.pi**2)
        integral = 0j
        f_M = 0j
        poch = 1.0 + 0j
        for j in range(12):
            c = (-1) ** j * poch * (2 * math.pi) ** (-2 * j)
            term = c * (za * M ** (-1 - 2 * j) / (1 + 2 * j) + zb * M ** (z - 1 - 2 * j) / (1 + 2 * j - z))
            integral += term
            f_M += c * M ** (-2 - 2 * j)
            poch *= (w + 1 + 2 * j) * (w + 2 + 2 * j)
            if abs(term) < 1e-20 * abs(integral):
                break
        total += pref * (integral - (S_M - smooth) * f_M)
    return total


def _quadratic_series(D, u: complex, v: complex, M: int, p: SeriesParams, variant: str) -> _Series:
    d = D.value
    f = D.modulus
    N = M + 1
    sig = sigma_prime_table(D, 1 - u - v, N)
    terms = np.zeros(N, dtype=complex)
    errs = np.zeros(N)
    flags = set()
    real = d > 0
    divergent = False
    for w in (u, v):
        if real:
            pref = (2 * math.pi) ** (2 * (w - 1)) * d ** ((1 - 2 * w) / 2)
            pref *= -2 if variant == "printed" else 1
        else:
            pref = (2 * math.pi) ** (2 * w - 1) * f ** ((1 - 2 * w) / 2)
            pref *= -1 if variant == "printed" else 1
            # the moment over [0, X] tends to a nonzero constant, so the printed series diverges
            if variant == "printed" and w.real >= 0 and w != 0:
                divergent = True
        for m in range(1, N + 1):
            if sig[m] == 0:
                continue
            if real:
                r = wilton_g_combo(w, d / (4 * math.pi**2 * m), p)
            elif variant == "printed":
                r = bessel_moment(w, 4 * math.pi**2 * m / f, p)
            else:
                r = bessel_tail(w, 4 * math.pi**2 * m / f, p.tolerance * 1e-2)
            flags |= r.flags
            c = pref * sig[m] * m ** (w - 1)
            terms[m - 1] += c * r.value
            errs[m - 1] += abs(c) * r.abs_error_estimate
    inv = field_invariants(D)
    const, cerr = _constant_term(D, inv.wilton_constant, u, v)
    return _Series(const, cerr, terms, errs, frozenset(flags), smoothed=True, divergent=divergent)


def _series(field_disc, u, v, M, p, variant) -> _Series:
    check_constraints(u, v)
    if variant not in VARIANTS:
        raise ConstraintViolation(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if M < 1:
        raise ConstraintViolation("truncation M must be positive")
    u, v = complex(u), complex(v)
    if field_disc == 0:
        return _rational_series(u, v, M, p)
    return _quadratic_series(as_disc(field_disc), u, v, M, p, variant)


def _assemble(s: _Series, u, v, M: int) -> tuple[EvalResult, np.ndarray]:
    """Right side at truncation M; ``partial`` must hold the cumulative sums."""
    partial = np.cumsum(s.terms[:M])
    flags = set(s.flags) | {Flag.TRUNCATED}
    first_omitted = float(abs(s.terms[M]))
    err = s.const_err + float(np.sum(s.term_err[:M]))
    if not s.smoothed:
        corr = s.correction(M)
        value = s.const + partial[-1] + corr
        tail = abs(corr) + first_omitted
    else:
        mean, tail = window_mean(partial, M)
        value = s.const + mean
        if s.divergent:
            flags.add(Flag.DIVERGENT)
            tail = math.inf
        else:
            tail += first_omitted
    return EvalResult(_real_if(u, v, value), err, M, frozenset(flags)), tail


def _lhs(field_disc, u, v) -> tuple[complex, float]:
    D = None if field_disc == 0 else as_disc(field_disc)
    a = dedekind_zeta_continued(D, u)
    b = dedekind_zeta_continued(D, v)
    val = a.value * b.value
    return val, abs(a.value) * b.error_estimate + abs(b.value) * a.error_estimate


# ------------------------------------------------------------------ public API


def wilton_rhs_rational(u: complex, v: complex, M: int, p: SeriesParams = DEFAULT_PARAMS,
                        tail_correction: bool = True) -> EvalResult:
    """Right side of the classical formula for K = Q, truncated at M.

    With ``tail_correction`` the omitted part of both series is estimated by
    Abel summation against the mean value of sigma_{1-u-v}.
    """
    s = _series(0, u, v, M, p, "printed")
    if not tail_correction:
        s.correction = lambda m: 0j
    r, _ = _assemble(s, u, v, M)
    return r


def wilton_rhs_real_quadratic(D, u: complex, v: complex, M: int, p: SeriesParams = DEFAULT_PARAMS,
                              variant: str = "printed") -> EvalResult:
    D = as_disc(D)
    if D.value < 0:
        raise ConstraintViolation("needs a real quadratic field (D > 0)")
    r, _ = _assemble(_series(D.value, u, v, M, p, variant), u, v, M)
    return r


def wilton_rhs_imaginary_quadratic(D, u: complex, v: complex, M: int, p: SeriesParams = DEFAULT_PARAMS,
                                   variant: str = "printed") -> EvalResult:
    D = as_disc(D)
    if D.value > 0:
        raise ConstraintViolation("needs an imaginary quadratic field (D < 0)")
    r, _ = _assemble(_series(D.value, u, v, M, p, variant), u, v, M)
    return r


def _report(field_disc, u, v, lhs, s: _Series, M: int, variant: str) -> WiltonReport:
    r, tail = _assemble(s, u, v, M)
    log = np.column_stack([np.arange(1, M + 1), np.abs(s.terms[:M])])
    lhs = _real_if(u, v, lhs)
    return WiltonReport(
        field_disc=int(field_disc), u=complex(u), v=complex(v), lhs=lhs, rhs=r.value,
        residual=float(abs(lhs - r.value)), truncation_M=M, tail_estimate=float(tail),
        per_term_log=log, flags=r.flags, rhs_error=r.abs_error_estimate, variant=variant,
    )


def verify(field_disc: int, u: complex, v: complex, M: int, p: SeriesParams = DEFAULT_PARAMS,
           variant: str = "printed") -> WiltonReport:
    """Compare zeta_K(u) zeta_K(v) against the truncated right side; ``field_disc = 0`` is Q."""
    return convergence_sweep(field_disc, u, v, [M], p, variant)[0]


def convergence_sweep(field_disc: int, u: complex, v: complex, M_list, p: SeriesParams = DEFAULT_PARAMS,
                      variant: str = "printed") -> list[WiltonReport]:
    """One report per truncation in ``M_list``; the series terms are computed once."""
    M_list = [int(m) for m in M_list]
    if not M_list:
        return []
    if any(b <= a for a, b in zip(M_list, M_list[1:])):
        raise ConstraintViolation("M_list must be strictly increasing")
    s = _series(field_disc, u, v, M_list[-1], p, variant)
    lhs, _ = _lhs(field_disc, complex(u), complex(v))
    return [_report(field_disc, u, v, lhs, s, M, variant) for M in M_list]


@dataclass(frozen=True)
class TrendAssessment:
    monotone: bool
    direction: str  # "decreasing", "increasing" or "mixed"
    honest_tails: bool
    plateau: bool
    final_residual: float
    final_tail: float


def assess_trend(reports: list[WiltonReport], tolerance: float = 1e-6) -> TrendAssessment:
    """Summarise a sweep.

    ``monotone``: residuals move in one direction. ``honest_tails``: each
    step changes rhs by no more than the previous tail estimate. ``plateau``:
    the final residual exceeds both ``tolerance`` and the final tail estimate,
    meaning further terms are not expected to close the gap.
    """
    res = [r.residual for r in reports]
    diffs = np.diff(res)
    if np.all(diffs < 0):
        direction = "decreasing"
    elif np.all(diffs > 0):
        direction = "increasing"
    else:
        direction = "mixed"
    honest = all(abs(b.rhs - a.rhs) <= a.tail_estimate for a, b in zip(reports, reports[1:]))
    last = reports[-1]
    plateau = last.residual > max(tolerance, last.tail_estimate)
    return TrendAssessment(direction != "mixed", direction, honest, plateau, last.residual, last.tail_estimate)
