"""Compare the routes to zeta_K(s) for a few quadratic fields.

    python3 demos/zeta_routes.py
"""

from zetaforge.arithmetic import field_invariants
from zetaforge.zetavalues import (
    dedekind_zeta_direct,
    dedekind_zeta_even_real_closed,
    dedekind_zeta_factored,
    dedekind_zeta_odd_imaginary,
    zagier_zeta2_imaginary,
)


def show(label, r):
    print(f"  {label:<10} {r.real:.15f}  (err {r.error_estimate:.1e}, {r.route})")


for D in (-7, -3, -4):
    inv = field_invariants(D)
    print(f"D = {D}: h = {inv.class_number}, w = {inv.w}")
    show("zagier", zagier_zeta2_imaginary(D))
    show("factored", dedekind_zeta_factored(D, 2))
    show("direct", dedekind_zeta_direct(D, 2))

for D in (5, 8, 13):
    print(f"D = {D}: regulator = {field_invariants(D).regulator:.12f}")
    show("closed", dedekind_zeta_even_real_closed(D, 2))
    show("factored", dedekind_zeta_factored(D, 4))

print("odd values for D = -4")
for n in (3, 5):
    show(f"closed s={n}", dedekind_zeta_odd_imaginary(-4, n))
    show(f"direct s={n}", dedekind_zeta_direct(-4, n))
