"""Exact rational machinery: Bernoulli numbers and polynomials,
generalized Bernoulli numbers of quadratic characters, Gauss sums."""

from __future__ import annotations

import cmath
import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arithmetic import as_disc, character_table

__all__ = [
    "ExactRational",
    "GaussForm",
    "GaussSumValue",
    "bernoulli_number",
    "bernoulli_polynomial",
    "generalized_bernoulli",
    "gauss_sum",
]

# Fraction keeps lowest terms with a positive denominator.
ExactRational = Fraction

BERNOULLI_CAP = 200


class _BernoulliTable:
    """Akiyama-Tanigawa triangle grown on demand; readers never see a partial row."""

    def __init__(self):
        self._lock = threading.Lock()
        self._values: tuple[Fraction, ...] = ()
        self._row: list[Fraction] = []

    def get(self, n: int) -> Fraction:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            vals = list(self._values)
            row = self._row
            for m in range(len(vals), n + 1):
                row.append(Fraction(1, m + 1))
                for j in range(m, 0, -1):
                    row[j - 1] = j * (row[j - 1] - row[j])
                vals.append(row[0])
            self._values = tuple(vals)
        return self._values[n]


_TABLE = _BernoulliTable()


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    return _TABLE.get(n)


def bernoulli_polynomial(n: int, x) -> Fraction:
    x = Fraction(x)
    total = Fraction(0)
    xp = Fraction(1)
    for k in range(n, -1, -1):
        b = bernoulli_number(k)
        if b:
            total += math.comb(n, k) * b * xp
        xp *= x
    return total


@lru_cache(maxsize=4096)
def _gen_bernoulli(d: int, n: int) -> Fraction:
    chi = character_table(d)
    f = chi.modulus
    s = Fraction(0)
    for a in range(1, f + 1):
        c = int(chi.values[a % f])
        if c:
            s += c * bernoulli_polynomial(n, Fraction(a, f))
    return f ** (n - 1) * s


def generalized_bernoulli(D, n: int) -> Fraction:
    """B_{n, chi_D} = f**(n-1) * sum_{a=1}^{f} chi(a) B_n(a/f).

    chi_D is real, so it coincides with its conjugate.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return _gen_bernoulli(as_disc(D).value, n)


class GaussForm(enum.Enum):
    SQRT_D = "SqrtD"
    I_SQRT_ABS_D = "ISqrtAbsD"
    NUMERIC = "Numeric"


@dataclass(frozen=True)
class GaussSumValue:
    real_part: float
    imag_part: float
    exact_form: GaussForm
    disc: int

    @property
    def value(self) -> complex:
        return complex(self.real_part, self.imag_part)

    @property
    def exact(self) -> complex:
        """Closed form when recognised, else the numeric value."""
        if self.exact_form is GaussForm.SQRT_D:
            return complex(math.sqrt(self.disc), 0.0)
        if self.exact_form is GaussForm.I_SQRT_ABS_D:
            return complex(0.0, math.sqrt(-self.disc))
        return self.value


@lru_cache(maxsize=1024)
def _gauss_sum(d: int) -> GaussSumValue:
    chi = character_table(d)
    f = chi.modulus
    parts = [int(chi.values[a % f]) * cmath.exp(2j * math.pi * a / f) for a in range(1, f + 1)]
    re = math.fsum(p.real for p in parts)
    im = math.fsum(p.imag for p in parts)
    tau = complex(re, im)
    root = math.sqrt(f)
    if d > 0 and abs(tau - root) < 1e-10:
        form = GaussForm.SQRT_D
    elif d < 0 and abs(tau - 1j * root) < 1e-10:
        form = GaussForm.I_SQRT_ABS_D
    else:
        form = GaussForm.NUMERIC
    return GaussSumValue(re, im, form, d)


def gauss_sum(D) -> GaussSumValue:
    """tau(chi_D) by direct summation of chi(a) exp(2 pi i a/|D|)."""
    return _gauss_sum(as_disc(D).value)
