import cmath
import math
import threading
from fractions import Fraction

import mpmath as mp
import pytest
import sympy

from zetaforge.arithmetic import fundamental_discriminants, kronecker_symbol
from zetaforge.exactnum import (
    GaussForm,
    bernoulli_number,
    bernoulli_polynomial,
    gauss_sum,
    generalized_bernoulli,
)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (4, Fraction(-1, 30)),
                                         (3, 0), (12, Fraction(-691, 2730)), (30, Fraction(8615841276005, 14322))])
def test_bernoulli_examples(n, expected):
    assert bernoulli_number(n) == expected


def test_bernoulli_matches_recurrence_oracle():
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
    for n in range(1, 80):
        assert sum(math.comb(n + 1, k) * bernoulli_number(k) for k in range(n + 1)) == 0


def test_bernoulli_matches_sympy_to_cap():
    for n in range(2, 201, 7):
        assert bernoulli_number(n) == Fraction(str(sympy.bernoulli(n)))


def test_von_staudt_clausen():
    for n in range(2, 31, 2):
        primes = [p for p in range(2, n + 2) if sympy.isprime(p) and n % (p - 1) == 0]
        assert bernoulli_number(n).denominator == math.prod(primes)


def test_bernoulli_table_concurrent_readers():
    out = {}

    def work(k):
        out[k] = [bernoulli_number(n) for n in range(0, 150, 2)]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    first = out[0]
    assert all(v == first for v in out.values())


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli_number(-2)


def test_bernoulli_polynomial_examples():
    assert bernoulli_polynomial(1, Fraction(1, 4)) == Fraction(-1, 4)
    assert bernoulli_polynomial(2, Fraction(1, 2)) == Fraction(-1, 12)
    for n in range(10):
        assert bernoulli_polynomial(n, 0) == bernoulli_number(n)
    # B_n(x + 1) - B_n(x) = n x^(n-1)
    x = Fraction(3, 7)
    for n in range(1, 12):
        assert bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x) == n * x ** (n - 1)


def test_fraction_arithmetic_exact():
    a, b = bernoulli_number(10), bernoulli_number(12)
    s = (a + b) * a.denominator * b.denominator
    assert s.denominator == 1
    assert s.numerator == a.numerator * b.denominator + b.numerator * a.denominator


def test_generalized_bernoulli_examples():
    assert generalized_bernoulli(-4, 1) == Fraction(-1, 2)
    assert generalized_bernoulli(5, 1) == 0
    # direct five-term sum with B_2(x) = x^2 - x + 1/6
    direct = 5 * sum(kronecker_symbol(5, a) * (Fraction(a, 5) ** 2 - Fraction(a, 5) + Fraction(1, 6))
                     for a in range(1, 6))
    assert generalized_bernoulli(5, 2) == direct == Fraction(4, 5)


def test_generalized_bernoulli_parity_vanishing():
    for D in fundamental_discriminants(50):
        for n in range(1, 13):
            b = generalized_bernoulli(D, n)
            parity_ok = (D > 0) == (n % 2 == 0)
            if not parity_ok and not (D > 0 and n == 1):
                assert b == 0, (D, n)
            if parity_ok:
                assert b != 0, (D, n)


def test_generalized_bernoulli_gives_L_at_negative_integers():
    # L(1 - n, chi) = -B_{n,chi}/n, independent oracle via mpmath Hurwitz zeta
    for D, n in [(-4, 1), (-3, 3), (5, 2), (8, 4), (-7, 1)]:
        f = abs(D)
        L = sum(kronecker_symbol(D, a) * mp.zeta(1 - n, mp.mpf(a) / f) for a in range(1, f + 1)) * mp.mpf(f) ** (n - 1)
        assert abs(float(L) + float(generalized_bernoulli(D, n)) / n) < 1e-12


@pytest.mark.parametrize("D, expected", [(-4, 2j), (5, math.sqrt(5)), (-3, 1j * math.sqrt(3))])
def test_gauss_sum_examples(D, expected):
    assert abs(gauss_sum(D).value - expected) < 1e-12


def test_gauss_sum_closed_form_all_small():
    for D in fundamental_discriminants(200):
        g = gauss_sum(D)
        target = math.sqrt(D) if D > 0 else 1j * math.sqrt(-D)
        assert abs(g.value - target) < 1e-10
        assert g.exact_form is (GaussForm.SQRT_D if D > 0 else GaussForm.I_SQRT_ABS_D)
        assert g.exact == target


def test_gauss_sum_against_direct_cmath():
    D = -23
    direct = sum(kronecker_symbol(D, a) * cmath.exp(2j * math.pi * a / 23) for a in range(1, 24))
    assert abs(gauss_sum(D).value - direct) < 1e-12
