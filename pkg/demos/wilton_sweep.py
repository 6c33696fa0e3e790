"""Measure the quadratic-field product formula as M grows, in both variants.

Writes one CSV per case next to this script and prints the trend summary.

    python3 demos/wilton_sweep.py
"""

import csv
from pathlib import Path

from zetaforge.wilton import assess_trend, convergence_sweep

HERE = Path(__file__).parent
M_LIST = [125, 250, 500, 1000, 2000]
CASES = [(5, 2.3, 2.4), (-4, 0.9, 2.5), (-4, 2, 3), (0, 2, 3)]

for D, u, v in CASES:
    for variant in ("printed", "corrected"):
        if D == 0 and variant == "corrected":
            continue
        reports = convergence_sweep(D, u, v, M_LIST, variant=variant)
        out = HERE / f"sweep_D{D}_u{u}_v{v}_{variant}.csv"
        with open(out, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["M", "lhs", "rhs", "residual", "tail_estimate"])
            for r in reports:
                w.writerow([r.truncation_M, f"{r.lhs.real:.15g}", f"{r.rhs.real:.15g}",
                            f"{r.residual:.6g}", f"{r.tail_estimate:.6g}"])
        t = assess_trend(reports)
        print(f"D={D:>3} u={u} v={v} {variant:<9} residual {t.final_residual:.3g} "
              f"tail {t.final_tail:.3g} {t.direction}, plateau={t.plateau}")
