"""Dedekind zeta values of quadratic fields by several independent routes,
and a numerical harness for Wilton-type product formulas."""

__version__ = "0.1.0"

from .arithmetic import (
    Discriminant,
    FieldInvariants,
    character_table,
    class_number,
    field_invariants,
    fundamental_unit,
    ideal_count,
    is_fundamental,
    kronecker_symbol,
    regulator,
    sigma_prime,
)
from .exactnum import bernoulli_number, bernoulli_polynomial, gauss_sum, generalized_bernoulli
from .specialfn import ConstraintViolation, EvalResult, Flag, SeriesParams
from .zetavalues import (
    Route,
    ZetaValue,
    dedekind_zeta_direct,
    dedekind_zeta_factored,
    riemann_zeta,
    zagier_zeta2_imaginary,
)
from .wilton import WiltonReport, convergence_sweep, verify

__all__ = [
    "ConstraintViolation",
    "Discriminant",
    "EvalResult",
    "FieldInvariants",
    "Flag",
    "Route",
    "SeriesParams",
    "WiltonReport",
    "ZetaValue",
    "bernoulli_number",
    "bernoulli_polynomial",
    "character_table",
    "class_number",
    "convergence_sweep",
    "dedekind_zeta_direct",
    "dedekind_zeta_factored",
    "field_invariants",
    "fundamental_unit",
    "gauss_sum",
    "generalized_bernoulli",
    "ideal_count",
    "is_fundamental",
    "kronecker_symbol",
    "regulator",
    "riemann_zeta",
    "sigma_prime",
    "verify",
    "zagier_zeta2_imaginary",
]
