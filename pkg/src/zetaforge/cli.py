"""Command-line interface.

    zetaforge field-info -d 5
    zetaforge zeta -d -7 -s 2 --route zagier
    zetaforge zeta -d -4 -s 3 --all-routes
    zetaforge verify-wilton -d 0 -u 2 -v 2 -M 100,400,1600
    zetaforge table --row=-7,2,zagier --row=5,4,closed -o out.csv

JSON is the default output (one object per invocation, or one line per M
for verify-wilton); ``--csv`` switches to CSV. Exit codes: 0 success,
1 a batch row failed, 2 bad input or a violated constraint.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

from . import __version__
from .arithmetic import Discriminant, field_invariants, ideal_counts
from .specialfn import ConstraintViolation, SeriesParams
from .wilton import VARIANTS, WiltonConstraintError, convergence_sweep
from . import zetavalues as zv

SCHEMA_VERSION = "1"
ROUTES = ("direct", "factored", "closed", "zagier", "wilton")
CSV_HEADER = ["D", "s", "route", "value_re", "value_im", "err", "flags", "error"]


class InputError(ValueError):
    pass


def fmt(x) -> str:
    """Decimal string with 17 significant digits; complex values as a+bj."""
    if isinstance(x, complex):
        if x.imag == 0:
            return fmt(x.real)
        return f"{x.real:.17g}{x.imag:+.17g}j"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.17g}"
    return str(x)


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InputError(f"not a number: {text!r}") from None


def _int_value(s: complex) -> int | None:
    if s.imag == 0 and s.real == int(s.real):
        return int(s.real)
    return None


# ------------------------------------------------------------------ zeta routes


def zeta_value(D: int, s: complex, route: str, p: SeriesParams, M: int = 400, variant: str = "printed"):
    """Dispatch one (D, s, route) request; ``D = 0`` means the Riemann zeta function."""
    if route not in ROUTES:
        raise InputError(f"unknown route {route!r}; expected one of {', '.join(ROUTES)}")
    k = _int_value(s)
    if D == 0:
        if route == "direct":
            return zv.riemann_zeta_direct(s, p)
        if route == "factored":
            return zv.riemann_zeta(s)
        if route == "closed":
            if k is not None and k >= 2 and k % 2 == 0:
                return zv.riemann_zeta_even(k // 2)
            if k is not None and k >= 3:
                return zv.zeta_odd_closed(k, p)
            raise InputError("closed route for D=0 needs an integer s >= 2")
        raise InputError(f"route {route} needs a quadratic field")
    Discriminant(D)
    if route == "direct":
        return zv.dedekind_zeta_direct(D, s, p)
    if route == "factored":
        return zv.dedekind_zeta_factored(D, s, p)
    if route == "closed":
        if D > 0 and k is not None and k >= 2 and k % 2 == 0:
            return zv.dedekind_zeta_even_real_closed(D, k // 2)
        if D < 0 and k is not None and k >= 3 and k % 2 == 1:
            return zv.dedekind_zeta_odd_imaginary(D, k, p)
        raise InputError("closed route needs D > 0 with even s >= 2, or D < 0 with odd s >= 3")
    if route == "zagier":
        if D < 0 and k == 2:
            return zv.zagier_zeta2_imaginary(D)
        raise InputError("zagier route needs D < 0 and s = 2")
    # wilton
    if D > 0 and k is not None and k >= 3 and k % 2 == 1:
        form = "corrected" if variant == "corrected" else "combo"
        return zv.dedekind_zeta_odd_real_wilton(D, (k - 1) // 2, p, M=M, form=form)
    if D < 0 and k is not None and k >= 4 and k % 2 == 0:
        return zv.dedekind_zeta_even_imaginary_wilton(D, k // 2, p, M=M, form=variant)
    raise InputError("wilton route needs D > 0 with odd s >= 3, or D < 0 with even s >= 4")


def _applicable_routes(D: int, s: complex) -> list[str]:
    k = _int_value(s)
    out = []
    if s.real > 1:
        out.append("direct")
    if s != 1:
        out.append("factored")
    if k is not None and D == 0 and k >= 2:
        out.append("closed")
    if k is not None and D > 0 and k >= 2 and k % 2 == 0:
        out.append("closed")
    if k is not None and D < 0 and k >= 3 and k % 2 == 1:
        out.append("closed")
    if D < 0 and k == 2:
        out.append("zagier")
    return out


# ------------------------------------------------------------------ output


def _record(command: str, inputs: dict, results: dict, flags, t0: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": {k: fmt(v) for k, v in inputs.items()},
        "results": results,
        "flags": sorted(flags),
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }


def _flag_names(flags) -> list[str]:
    return sorted(f.value for f in flags)


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _csv_writer(out):
    return csv.writer(out, lineterminator="\n")


def _params(args) -> SeriesParams:
    kw = {}
    if args.max_terms is not None:
        kw["max_terms"] = args.max_terms
    if args.tolerance is not None:
        kw["tolerance"] = args.tolerance
    if args.epsilon is not None:
        kw["epsilon_perturb"] = args.epsilon
    return SeriesParams(**kw)


# ------------------------------------------------------------------ commands


def cmd_field_info(args, out) -> int:
    t0 = time.perf_counter()
    inv = field_invariants(args.d)
    counts = ideal_counts(inv.disc, 20)[1:].tolist()
    results = {
        "disc": str(inv.disc.value),
        "signature": f"({inv.r1},{inv.r2})",
        "w": str(inv.w),
        "h": str(inv.class_number),
        "regulator": fmt(inv.regulator),
        "residue": fmt(inv.residue),
        "ideal_counts": [str(c) for c in counts],
    }
    if args.csv:
        w = _csv_writer(out)
        w.writerow(["key", "value"])
        for k, v in results.items():
            w.writerow([k, " ".join(v) if isinstance(v, list) else v])
    else:
        _emit_json(_record("field-info", {"d": args.d}, results, [], t0), out)
    return 0


def _value_fields(r) -> dict:
    return {
        "value_re": fmt(float(r.value.real)),
        "value_im": fmt(float(r.value.imag)),
        "error_estimate": fmt(float(r.error_estimate)),
        "route": str(r.route),
        "flags": _flag_names(r.flags),
    }


def cmd_zeta(args, out) -> int:
    t0 = time.perf_counter()
    p = _params(args)
    s = parse_complex(args.s)
    inputs = {"d": args.d, "s": s}
    if args.all_routes:
        if args.d != 0:
            Discriminant(args.d)
        routes = _applicable_routes(args.d, s)
        vals = {}
        for route in routes:
            vals[route] = zeta_value(args.d, s, route, p, args.M, args.variant)
        deltas = {}
        for i, a in enumerate(routes):
            for b in routes[i + 1:]:
                deltas[f"{a}-{b}"] = fmt(abs(vals[a].value - vals[b].value))
        if args.csv:
            w = _csv_writer(out)
            w.writerow(CSV_HEADER[:-1])
            for route, r in vals.items():
                w.writerow(_csv_row(args.d, s, route, r))
            return 0
        results = {"routes": {k: _value_fields(v) for k, v in vals.items()}, "deltas": deltas}
        flags = set().union(*(v["flags"] for v in results["routes"].values())) if vals else set()
        _emit_json(_record("zeta", inputs, results, flags, t0), out)
        return 0
    r = zeta_value(args.d, s, args.route, p, args.M, args.variant)
    inputs["route"] = args.route
    if args.csv:
        w = _csv_writer(out)
        w.writerow(CSV_HEADER[:-1])
        w.writerow(_csv_row(args.d, s, args.route, r))
        return 0
    res = _value_fields(r)
    _emit_json(_record("zeta", inputs, res, res["flags"], t0), out)
    return 0


def _parse_M_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"bad -M list {text!r}") from None
    if not vals or any(m < 1 for m in vals):
        raise InputError("-M needs positive integers")
    return vals


def cmd_verify_wilton(args, out) -> int:
    t0 = time.perf_counter()
    p = _params(args)
    u, v = parse_complex(args.u), parse_complex(args.v)
    if args.d != 0:
        Discriminant(args.d)
    reports = convergence_sweep(args.d, u, v, _parse_M_list(args.M), p, variant=args.variant)
    if args.csv:
        w = _csv_writer(out)
        w.writerow(["M", "residual", "tail_estimate", "flags"])
        for r in reports:
            w.writerow([r.truncation_M, fmt(r.residual), fmt(r.tail_estimate), ";".join(_flag_names(r.flags))])
        return 0
    for r in reports:
        results = {
            "M": str(r.truncation_M),
            "lhs": fmt(r.lhs),
            "rhs": fmt(r.rhs),
            "residual": fmt(r.residual),
            "tail_estimate": fmt(r.tail_estimate),
            "rhs_error": fmt(r.rhs_error),
            "variant": r.variant,
        }
        inputs = {"d": args.d, "u": u, "v": v, "M": r.truncation_M}
        _emit_json(_record("verify-wilton", inputs, results, _flag_names(r.flags), t0), out)
    return 0


def _csv_row(D, s, route, r, error: str | None = None) -> list[str]:
    row = [str(D), fmt(s), route, fmt(float(r.value.real)), fmt(float(r.value.imag)),
           fmt(float(r.error_estimate)), ";".join(_flag_names(r.flags))]
    return row + [error] if error is not None else row


def _read_batch(path: str) -> list[tuple[str, str, str]]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        rows = json.loads(text)
        return [(str(r["D"]), str(r["s"]), str(r["route"])) for r in rows]
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and not r[0].startswith("#")]
    if rows and rows[0][0].strip().upper() == "D":
        rows = rows[1:]
    return [tuple(c.strip() for c in r[:3]) for r in rows]


def cmd_table(args, out) -> int:
    p = _params(args)
    rows = []
    if args.batch:
        rows += _read_batch(args.batch)
    for r in args.row or []:
        parts = [c.strip() for c in r.split(",")]
        if len(parts) != 3:
            raise InputError(f"--row needs D,s,route, got {r!r}")
        rows.append(tuple(parts))
    sink = open(args.output, "w", encoding="utf-8", newline="") if args.output else out
    failed = 0
    try:
        w = _csv_writer(sink)
        w.writerow(CSV_HEADER)
        for D_text, s_text, route in rows:
            try:
                D = int(D_text)
                s = parse_complex(s_text)
                r = zeta_value(D, s, route, p, args.M, args.variant)
                w.writerow(_csv_row(D, s, route, r, ""))
            except (ValueError, TypeError, ArithmeticError) as exc:
                failed += 1
                w.writerow([D_text, s_text, route, "", "", "", "", str(exc)])
    finally:
        if sink is not out:
            sink.close()
    return 1 if failed else 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, help="series/quadrature tolerance")
    common.add_argument("--max-terms", type=int, help="series term cap (env ZETAFORGE_MAX_TERMS)")
    common.add_argument("--epsilon", type=float, help="integer-parameter perturbation")
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", dest="csv", action="store_false", default=False, help="JSON output (default)")
    fmt_group.add_argument("--csv", dest="csv", action="store_true", default=False, help="CSV output")

    parser = argparse.ArgumentParser(prog="zetaforge", description="Dedekind zeta values of quadratic fields.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field-info", parents=[common], help="invariants of a quadratic field")
    f.add_argument("-d", type=int, required=True, help="fundamental discriminant")
    f.set_defaults(func=cmd_field_info)

    z = sub.add_parser("zeta", parents=[common], help="zeta_K(s) by one or all routes")
    z.add_argument("-d", type=int, required=True, help="discriminant (0 for Q)")
    z.add_argument("-s", required=True, help="argument, e.g. 2 or 1.5+3j")
    z.add_argument("--route", choices=ROUTES, default="factored")
    z.add_argument("--all-routes", action="store_true", help="every applicable route and pairwise deltas")
    z.add_argument("-M", type=int, default=400, help="truncation for the wilton route")
    z.add_argument("--variant", choices=VARIANTS, default="printed")
    z.set_defaults(func=cmd_zeta)

    w = sub.add_parser("verify-wilton", parents=[common], help="check the product formula")
    w.add_argument("-d", type=int, required=True, help="discriminant (0 for Q)")
    w.add_argument("-u", required=True)
    w.add_argument("-v", required=True)
    w.add_argument("-M", default="100,400", help="comma-separated truncations, increasing")
    w.add_argument("--variant", choices=VARIANTS, default="printed")
    w.set_defaults(func=cmd_verify_wilton)

    t = sub.add_parser("table", parents=[common], help="batch of (D, s, route) rows to CSV")
    t.add_argument("--batch", "--spec", dest="batch", help="batch file: CSV with D,s,route columns or a JSON list")
    t.add_argument("--row", action="append", help="one D,s,route row (repeatable)")
    t.add_argument("-o", "--output", help="output path (default stdout)")
    t.add_argument("-M", type=int, default=400, help="truncation for the wilton route")
    t.add_argument("--variant", choices=VARIANTS, default="printed")
    t.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        return args.func(args, out)
    except WiltonConstraintError as exc:
        print(f"error: {exc.hypothesis} violated", file=sys.stderr)
        return 2
    except (ConstraintViolation, InputError, ValueError, TypeError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
