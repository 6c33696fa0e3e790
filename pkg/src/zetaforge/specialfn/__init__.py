"""Floating-point special functions used by the zeta routes."""

from .core import (
    ConstraintViolation,
    EvalResult,
    Flag,
    SeriesParams,
    bessel_j0,
    bessel_j1,
    complex_gamma,
    complex_loggamma,
    digamma_int,
    reciprocal_gamma,
    trigamma_int,
)
from .meijer import (
    bessel_moment,
    bessel_tail,
    meijer_g_0331,
    meijer_g_0331_contour,
    phased_difference,
    wilton_g_combo,
)
from .quadrature import QuadratureError, gauss_kronrod
from .tails import hankel_power_tail, k0_power_tail, osc_power_tail, sine_tail_integral
from .zagier import zagier_A, zagier_A_m, zagier_A_m_result, zagier_A_result

__all__ = [
    "ConstraintViolation",
    "EvalResult",
    "Flag",
    "SeriesParams",
    "QuadratureError",
    "bessel_j0",
    "bessel_j1",
    "bessel_moment",
    "bessel_tail",
    "complex_gamma",
    "complex_loggamma",
    "digamma_int",
    "gauss_kronrod",
    "hankel_power_tail",
    "k0_power_tail",
    "meijer_g_0331",
    "meijer_g_0331_contour",
    "osc_power_tail",
    "phased_difference",
    "reciprocal_gamma",
    "sine_tail_integral",
    "trigamma_int",
    "wilton_g_combo",
    "zagier_A",
    "zagier_A_m",
    "zagier_A_m_result",
    "zagier_A_result",
]
