"""Arithmetic of quadratic fields.

Discriminants, Kronecker characters, ideal counts, divisor convolutions,
fundamental units, class numbers and the residue of the Dedekind zeta
function at ``s = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Discriminant",
    "CharacterTable",
    "FieldInvariants",
    "is_fundamental",
    "kronecker_symbol",
    "character_table",
    "ideal_count",
    "ideal_counts",
    "sigma_prime",
    "sigma_prime_table",
    "fundamental_unit",
    "regulator",
    "class_number",
    "roots_of_unity",
    "field_invariants",
    "fundamental_discriminants",
]


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def is_fundamental(n: int) -> bool:
    """True iff ``n`` is the discriminant of a quadratic field."""
    n = int(n)
    if n in (0, 1):
        return False
    if n % 4 == 1:
        return _is_squarefree(n)
    if n % 16 in (8, 12):
        return _is_squarefree(n // 4)
    return False


@dataclass(frozen=True)
class Discriminant:
    """Fundamental discriminant of a quadratic field."""

    value: int

    def __post_init__(self):
        v = self.value
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise TypeError(f"discriminant must be an integer, got {v!r}")
        object.__setattr__(self, "value", int(v))
        if not is_fundamental(self.value):
            raise ValueError(f"{self.value} is not a fundamental discriminant: {_failed_invariant(self.value)}")

    @property
    def modulus(self) -> int:
        return abs(self.value)

    @property
    def is_real(self) -> bool:
        return self.value > 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def _failed_invariant(n: int) -> str:
    if n in (0, 1):
        return "value must differ from 0 and 1"
    if n % 4 == 1:
        return "value = 1 (mod 4) but not squarefree"
    if n % 4 == 0:
        if n % 16 not in (8, 12):
            return "value = 0 (mod 4) but value/4 is not 2 or 3 (mod 4)"
        return "value/4 is not squarefree"
    return "value must be 0 or 1 (mod 4)"


def as_disc(D) -> Discriminant:
    return D if isinstance(D, Discriminant) else Discriminant(D)


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    return result * _jacobi(a, n)


def kronecker_symbol(D, n: int) -> int:
    """chi_D(n): the Kronecker symbol (D/n), periodic modulo |D|."""
    D = as_disc(D)
    return _kronecker(D.value, int(n) % D.modulus)


@dataclass(frozen=True)
class CharacterTable:
    """chi_D tabulated on one period; ``values[a] = chi_D(a mod modulus)``."""

    disc: int
    modulus: int
    values: np.ndarray

    def __call__(self, n):
        return self.values[np.asarray(n) % self.modulus]

    @property
    def parity(self) -> int:
        return int(self.values[self.modulus - 1])


@lru_cache(maxsize=512)
def character_table(D) -> CharacterTable:
    D = as_disc(D)
    f = D.modulus
    vals = np.array([_kronecker(D.value, a) for a in range(f)], dtype=np.int64)
    vals.setflags(write=False)
    return CharacterTable(D.value, f, vals)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def ideal_count(D, m: int) -> int:
    """Number of integral ideals of norm ``m``: sum of chi_D(d) over d | m."""
    if m < 1:
        raise ValueError("ideal_count requires m >= 1")
    chi = character_table(D)
    return int(sum(chi.values[d % chi.modulus] for d in _divisors(int(m))))


def ideal_counts(D, M: int) -> np.ndarray:
    """Array ``v`` of length M+1 with ``v[m]`` the ideal count (``v[0] = 0``).

    ``D = None`` gives the rational case, where every count is 1.
    """
    v = np.zeros(M + 1, dtype=np.int64)
    if D is None:
        v[1:] = 1
        return v
    chi = character_table(D)
    # pairs (d, q) with d q = m: small d by stride, large d grouped by the cofactor q
    S = math.isqrt(M)
    for d in range(1, S + 1):
        c = chi.values[d % chi.modulus]
        if c:
            v[d::d] += c
    for q in range(1, M // (S + 1) + 1):
        d = np.arange(S + 1, M // q + 1)
        v[q * d] += chi.values[d % chi.modulus]
    return v


def sigma_prime(D, z: complex, n: int) -> complex:
    """sum over t | n of t**z * v(t) * v(n/t)."""
    if n < 1:
        raise ValueError("sigma_prime requires n >= 1")
    divs = _divisors(int(n))
    v = {d: ideal_count(D, d) for d in divs}
    total = sum(complex(t) ** z * v[t] * v[n // t] for t in divs)
    return total if isinstance(z, complex) and z.imag else total.real


def sigma_prime_table(D, z: complex, M: int) -> np.ndarray:
    """Complex array ``s`` with ``s[m] = sigma_prime(D, z, m)`` for m <= M.

    ``D = None`` gives the ordinary divisor function sigma_z.
    """
    v = ideal_counts(D, M)
    out = np.zeros(M + 1, dtype=complex)
    z = complex(z)
    for t in range(1, M + 1):
        if v[t] == 0:
            continue
        idx = np.arange(t, M + 1, t)
        out[idx] += (t ** z) * v[t] * v[idx // t]
    return out


def _cf_convergents(P: int, Q: int, D: int):
    """Convergents p/q of (P + sqrt(D))/Q, requires Q | D - P**2."""
    s = math.isqrt(D)
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    while True:
        a = (P + s) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q
        P = a * Q - P
        Q = (D - P * P) // Q


def fundamental_unit(D) -> tuple[int, int, int]:
    """Fundamental unit (x + y sqrt(D))/2 of a real quadratic field.

    Returns ``(x, y, norm)`` with ``x**2 - D*y**2 == 4*norm``.
    """
    D = as_disc(D)
    if D.value < 0:
        raise ValueError("fundamental_unit requires D > 0")
    d = D.value
    b = d % 2
    # omega = (b + sqrt(d))/2, unit = p - q*conj(omega) = (2p - bq + q sqrt(d))/2
    for p, q in _cf_convergents(b, 2, d):
        x = 2 * p - b * q
        n4 = x * x - d * q * q
        if n4 in (4, -4):
            return x, q, n4 // 4


def regulator(D) -> float:
    """Natural log of the fundamental unit."""
    x, y, _ = fundamental_unit(D)
    d = as_disc(D).value
    return math.log(x) + math.log1p(y * math.sqrt(d) / x) - math.log(2.0)


def roots_of_unity(D) -> int:
    D = as_disc(D).value
    return {-4: 4, -3: 6}.get(D, 2)


def class_number(D) -> int:
    D = as_disc(D)
    f = D.modulus
    chi = character_table(D)
    if D.value < 0:
        w = roots_of_unity(D)
        s = int(np.dot(chi.values, np.arange(f)))
        h = w * abs(s)
        assert h % (2 * f) == 0
        return h // (2 * f)
    from .zetavalues import dirichlet_L_direct

    L1 = dirichlet_L_direct(D, 1.0).value.real
    approx = math.sqrt(f) * L1 / (2.0 * regulator(D))
    h = round(approx)
    if abs(approx - h) >= 0.25 or h < 1:
        raise ArithmeticError(f"class number for D={D.value} not resolved: h ~ {approx}")
    return int(h)


@dataclass(frozen=True)
class FieldInvariants:
    disc: Discriminant
    r1: int
    r2: int
    w: int
    class_number: int
    regulator: float
    residue: float

    @property
    def wilton_constant(self) -> float:
        """Coefficient of zeta_K(u+v-1) in the Wilton-type identity (the residue)."""
        if self.disc.value > 0:
            return 4 * self.class_number * self.regulator / (self.w * math.sqrt(self.disc.value))
        return 2 * math.pi * self.class_number / (self.w * math.sqrt(-self.disc.value))


@lru_cache(maxsize=256)
def _field_invariants(d: int) -> FieldInvariants:
    D = Discriminant(d)
    h = class_number(D)
    w = roots_of_unity(D)
    if d > 0:
        R = regulator(D)
        res = 2.0 * h * R / math.sqrt(d)
        r1, r2 = 2, 0
    else:
        R = 0.0
        res = 2.0 * math.pi * h / (w * math.sqrt(-d))
        r1, r2 = 0, 1
    from .zetavalues import dirichlet_L_direct

    L1 = dirichlet_L_direct(D, 1.0).value.real
    if abs(L1 - res) > 1e-8:
        raise ArithmeticError(f"residue {res} disagrees with L(1, chi) = {L1} for D={d}")
    return FieldInvariants(D, r1, r2, w, h, R, res)


def field_invariants(D) -> FieldInvariants:
    return _field_invariants(as_disc(D).value)


def fundamental_discriminants(bound: int, sign: int = 0) -> list[int]:
    """Fundamental discriminants with ``|D| <= bound``; sign selects real/imaginary."""
    out = []
    for n in range(-bound, bound + 1):
        if sign and n * sign <= 0:
            continue
        if is_fundamental(n):
            out.append(n)
    return out
