import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest

from zetaforge.arithmetic import fundamental_discriminants
from zetaforge.exactnum import bernoulli_number
from zetaforge.specialfn import ConstraintViolation, Flag, SeriesParams
from zetaforge.zetavalues import (
    Route,
    cl_coefficients,
    dedekind_zeta_continued,
    dedekind_zeta_direct,
    dedekind_zeta_even_imaginary_wilton,
    dedekind_zeta_even_real_closed,
    dedekind_zeta_factored,
    dedekind_zeta_odd_imaginary,
    dedekind_zeta_odd_real_wilton,
    dirichlet_L_direct,
    dirichlet_L_even_closed,
    dirichlet_L_odd_closed,
    hurwitz_zeta,
    ramanujan_identity_check,
    ramanujan_S,
    riemann_zeta,
    riemann_zeta_direct,
    riemann_zeta_even,
    window_mean,
    zagier_zeta2_imaginary,
    zeta_odd_closed,
)

CATALAN = float(mp.catalan)
ZETA3 = 1.2020569031595942
ZETA5 = 1.0369277551433699


def _kronecker(D, a):
    # package-independent Kronecker symbol built on sympy's Jacobi symbol (D is a discriminant)
    from sympy import jacobi_symbol

    if a % 2 == 0:
        if D % 2 == 0:
            return 0
        return (1 if D % 8 in (1, 7) else -1) * _kronecker(D, a // 2)
    return jacobi_symbol(D % a, a) if a > 1 else 1


def mp_L(D, s):
    f = abs(D)
    return sum(_kronecker(D, a) * mp.zeta(s, mp.mpf(a) / f) for a in range(1, f + 1)) / mp.mpf(f) ** s


def mp_dedekind(D, s):
    return complex(mp.zeta(s) * mp_L(D, s))


# ---------------------------------------------------------------- Riemann zeta


def test_riemann_zeta_even_examples():
    z1 = riemann_zeta_even(1)
    assert z1.exact_coefficient == Fraction(1, 6)
    assert z1.real == pytest.approx(1.6449340668, abs=1e-10)
    assert riemann_zeta_even(2).real == pytest.approx(math.pi**4 / 90, abs=1e-14)


@pytest.mark.parametrize("n", range(1, 7))
def test_riemann_zeta_even_vs_direct(n):
    assert abs(riemann_zeta_even(n).real - riemann_zeta_direct(2 * n).real) < 1e-10
    assert abs(riemann_zeta_even(n).real - float(mp.zeta(2 * n))) < 1e-14


def test_riemann_zeta_direct_examples():
    assert abs(riemann_zeta_direct(2).real - 1.6449340668) < 1e-10
    assert abs(riemann_zeta_direct(3).real - 1.2020569032) < 1e-10
    z = riemann_zeta_direct(3)
    assert z.route is Route.DIRECT_SERIES and z.error_estimate < 1e-12
    with pytest.raises(ConstraintViolation):
        riemann_zeta_direct(1)


def test_riemann_zeta_complex_against_mpmath():
    for s in (0.5 + 14j, 2 + 3j, -1.5, 0.3):
        assert abs(riemann_zeta(s).value - complex(mp.zeta(s))) < 1e-10


def test_hurwitz_zeta_against_mpmath():
    for s, a in [(2, 0.25), (3.5, 0.7), (0.5 + 2j, 0.1), (1.2, 1.0)]:
        assert abs(hurwitz_zeta(s, a).value - complex(mp.zeta(s, a))) < 1e-11


# ---------------------------------------------------------------- Dirichlet L


def test_dirichlet_L_direct_examples():
    assert abs(dirichlet_L_direct(-4, 1).real - math.pi / 4) < 1e-10
    assert abs(dirichlet_L_direct(-4, 2).real - CATALAN) < 1e-10
    assert abs(dirichlet_L_direct(5, 1).real - 2 * math.log((1 + math.sqrt(5)) / 2) / math.sqrt(5)) < 1e-10
    with pytest.raises(ConstraintViolation):
        dirichlet_L_direct(5, 0)


def test_dirichlet_L_strip_against_mpmath():
    for D, s in [(-4, 0.5), (5, 0.3 + 2j), (-7, 0.8)]:
        assert abs(dirichlet_L_direct(D, s).value - complex(mp_L(D, s))) < 1e-10


@pytest.mark.parametrize("D", [5, 8, 12, 13, 17])
def test_L_even_closed_two_routes(D):
    for n in (1, 2, 3):
        c = dirichlet_L_even_closed(D, n)
        assert c.real > 0
        assert abs(c.real - dirichlet_L_direct(D, 2 * n).real) < 1e-9
    with pytest.raises(ConstraintViolation):
        dirichlet_L_even_closed(-4, 1)


def test_L_odd_closed_examples():
    assert abs(dirichlet_L_odd_closed(-4, 0).real - math.pi / 4) < 1e-14
    assert abs(dirichlet_L_odd_closed(-3, 0).real - math.pi / (3 * math.sqrt(3))) < 1e-14
    assert abs(dirichlet_L_odd_closed(-4, 1).real - math.pi**3 / 32) < 1e-14
    for D in (-3, -7, -8, -23):
        for n in (0, 1, 2):
            assert abs(dirichlet_L_odd_closed(D, n).real - dirichlet_L_direct(D, 2 * n + 1).real) < 1e-9
    with pytest.raises(ConstraintViolation):
        dirichlet_L_odd_closed(5, 1)


# ---------------------------------------------------------------- Dedekind zeta


def test_dedekind_direct_examples():
    r = dedekind_zeta_direct(-4, 2)
    assert abs(r.real - math.pi**2 / 6 * CATALAN) <= r.error_estimate
    assert r.real == pytest.approx(1.5067, abs=1e-4)
    with pytest.raises(ConstraintViolation):
        dedekind_zeta_direct(5, 1)


@pytest.mark.parametrize("D", fundamental_discriminants(24))
def test_direct_vs_factored(D):
    for s in (2, 3, 4):
        d = dedekind_zeta_direct(D, s)
        f = dedekind_zeta_factored(D, s)
        assert abs(d.real - f.real) < d.error_estimate, (D, s)


def test_factored_against_mpmath():
    for D, s in [(-4, 2), (5, 3), (-23, 2.5), (13, 4)]:
        assert abs(dedekind_zeta_factored(D, s).real - mp_dedekind(D, s).real) < 1e-12


def test_factored_anchor_minus7():
    assert abs(dedekind_zeta_factored(-7, 2).real - 1.89484144897) < 1e-9


def test_factored_minus3_true_value():
    # the value fixed by zeta(2) L(2, chi_-3), computed here with mpmath
    ref = mp_dedekind(-3, 2).real
    assert abs(dedekind_zeta_factored(-3, 2).real - ref) < 1e-12
    assert abs(ref - 1.2851909554841494) < 1e-13


def test_dedekind_continued_matches_in_strip():
    for D, s in [(5, 0.5), (-4, 0.7 + 1j), (-23, 0.2)]:
        assert abs(dedekind_zeta_continued(D, s).value - mp_dedekind(D, s)) < 1e-10
    assert abs(dedekind_zeta_continued(None, 0.5).value - complex(mp.zeta(0.5))) < 1e-10


@pytest.mark.parametrize("D", [5, 8, 13])
@pytest.mark.parametrize("n", [1, 2])
def test_even_real_closed_vs_factored(D, n):
    a = dedekind_zeta_even_real_closed(D, n)
    assert a.route is Route.CLOSED_FORM
    assert abs(a.real - dedekind_zeta_factored(D, 2 * n).real) < 1e-9


def test_even_real_closed_rejects_imaginary():
    with pytest.raises(ConstraintViolation):
        dedekind_zeta_even_real_closed(-4, 1)


# ---------------------------------------------------------------- Ramanujan, odd zeta


def test_ramanujan_S_examples():
    first = 1 / math.expm1(2 * math.pi)
    v = ramanujan_S(3, 2).real
    assert first < v < 1.01 * first
    assert ramanujan_S(3, 4).real < v
    a = ramanujan_S(3, 1, SeriesParams(max_terms=50)).real
    b = ramanujan_S(3, 1, SeriesParams(max_terms=100)).real
    assert abs(a - b) < 1e-15


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("alpha", [math.pi, 2 * math.pi])
def test_ramanujan_identity(n, alpha):
    assert ramanujan_identity_check(n, alpha) < 1e-10


def test_cl_coefficients_examples():
    cl = cl_coefficients(1)
    assert cl.F == Fraction(-7, 720)
    # G_1 = sum_{k=0}^{2} (-4)^k B_2k B_{4-2k} / ((2k)! (4-2k)!)
    B = bernoulli_number
    G1 = sum(Fraction(-4) ** k * B(2 * k) * B(4 - 2 * k) / (math.factorial(2 * k) * math.factorial(4 - 2 * k))
             for k in range(3))
    assert cl.G == G1
    assert cl.Km == Fraction(1 - 16, 2) / (1 - 4 - 32)


def test_cl_coefficients_recomputable():
    for m in (1, 2, 3):
        a, b = cl_coefficients(m), cl_coefficients(m)
        assert a == b
        assert all(isinstance(x, Fraction) for x in (a.F, a.G, a.G2m, a.Dm, a.Km, a.Em, a.Hm))


@pytest.mark.parametrize("n, ref", [(3, ZETA3), (5, ZETA5), (7, None), (9, None), (11, None), (13, None)])
def test_zeta_odd_closed_vs_direct(n, ref):
    v = zeta_odd_closed(n).real
    assert abs(v - riemann_zeta_direct(n).real) < 1e-9
    if ref is not None:
        assert abs(v - ref) < 1e-12


def test_zeta_odd_closed_rejects_even():
    with pytest.raises(ConstraintViolation):
        zeta_odd_closed(4)


def test_printed_plus_weights_do_not_reproduce_zeta5():
    # the widely circulated weights for zeta(4m+1) miss zeta(5); kept only for comparison
    cl = cl_coefficients(1)
    S = [ramanujan_S(5, r).real for r in (1, 2, 4)]
    printed = sum(float(c) * s for c, s in zip(cl.plus_weights_as_printed(), S))
    assert abs(printed - ZETA5) > 1e-3


@pytest.mark.parametrize("D, n", [(-4, 3), (-3, 3), (-4, 5), (-7, 3), (-8, 7)])
def test_odd_imaginary_vs_direct(D, n):
    d = dedekind_zeta_direct(D, n)
    assert abs(dedekind_zeta_odd_imaginary(D, n).real - d.real) < max(d.error_estimate, 1e-12)


# ---------------------------------------------------------------- Zagier


def test_zagier_anchor_minus7():
    assert abs(zagier_zeta2_imaginary(-7).real - 1.89484144897) < 1e-8


@pytest.mark.parametrize("D", fundamental_discriminants(24, -1))
def test_zagier_vs_factored(D):
    z = zagier_zeta2_imaginary(D)
    assert z.route is Route.ZAGIER
    assert abs(z.real - dedekind_zeta_factored(D, 2).real) < 1e-8


def test_zagier_rejects_real():
    with pytest.raises(ConstraintViolation):
        zagier_zeta2_imaginary(5)


# ---------------------------------------------------------------- identity-derived values


def test_window_mean_on_oscillating_sum():
    # partial sums of sum (-1)^m / m oscillate around -log 2
    m = np.arange(1, 4001)
    partial = np.cumsum((-1.0) ** m / m)
    v, tail = window_mean(partial)
    assert abs(v + math.log(2)) < tail
    assert tail < 1e-3


def test_odd_real_wilton_constant_term_isolation():
    full = dedekind_zeta_odd_real_wilton(5, 1, M=40)
    const = dedekind_zeta_odd_real_wilton(5, 1, include_series=False)
    assert const.route is Route.WILTON_DERIVED
    assert const.real == pytest.approx(full.details["constant_term"], rel=1e-15)
    total = const.real + full.details["series_u2"] + full.details["series_u3"]
    assert full.real == pytest.approx(total, rel=1e-12)


def test_odd_real_wilton_corrected_converges():
    ref = dedekind_zeta_direct(5, 3).real
    a = dedekind_zeta_odd_real_wilton(5, 1, M=250, form="corrected")
    b = dedekind_zeta_odd_real_wilton(5, 1, M=500, form="corrected")
    assert Flag.TRUNCATED in b.flags
    assert abs(b.real - a.real) <= a.error_estimate
    assert abs(b.real - ref) < abs(a.real - ref) + 1e-3
    assert abs(b.real - ref) < 0.05


def test_odd_real_wilton_term_log():
    r = dedekind_zeta_odd_real_wilton(8, 1, M=30, form="corrected")
    assert r.details["M"] == 30
    assert set(r.details["terms"]) == {2, 3}
    assert len(r.details["terms"][2]) == 30


def test_even_imaginary_wilton_printed_is_flagged_divergent():
    r = dedekind_zeta_even_imaginary_wilton(-4, 2, M=60, form="printed")
    assert Flag.DIVERGENT in r.flags and Flag.REGULARIZED in r.flags
    assert r.error_estimate == math.inf


def test_even_imaginary_wilton_corrected_converges():
    ref = dedekind_zeta_direct(-4, 4).real
    a = dedekind_zeta_even_imaginary_wilton(-4, 2, M=250, form="corrected")
    b = dedekind_zeta_even_imaginary_wilton(-4, 2, M=500, form="corrected")
    assert abs(b.real - a.real) <= a.error_estimate
    assert abs(b.real - ref) < 0.05
    const = dedekind_zeta_even_imaginary_wilton(-4, 2, include_series=False)
    assert const.real == pytest.approx(b.details["constant_term"], rel=1e-15)


def test_even_imaginary_wilton_domain():
    with pytest.raises(ConstraintViolation):
        dedekind_zeta_even_imaginary_wilton(-4, 1)
    with pytest.raises(ConstraintViolation):
        dedekind_zeta_odd_real_wilton(-4, 1)
