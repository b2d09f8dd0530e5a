"""Command-line interface: expand, zeros, verify, study.

Output is CSV (default) or JSON.  JSON documents have the fields
schema_version, command, params, rows (plus summary for ``study``); floats
are written with 17 significant digits and exact rationals as "num/den"
strings, so reruns are byte-identical.

Exit codes: 0 success, 2 usage error, 3 numeric failure (bracket or
convergence), 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 0, 2, 3, 4
EXPANSION_K_MAX = 100_000
REFINED_K_MAX = 1_000
DEFAULT_ORDER = 4


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- formatting

def fmt_float(x):
    if x is None or (isinstance(x, float) and not math.isfinite(x)):
        return None
    return format(float(x), ".17g")


def fmt_rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class _Raw(str):
    """A pre-formatted JSON number."""


def _jsonable(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, float):
        s = fmt_float(v)
        return None if s is None else _Raw(s)
    if isinstance(v, Fraction):
        return fmt_rat(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _dump(v, indent=0):
    pad = "  " * indent
    if isinstance(v, _Raw):
        return str(v)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_dump(x, indent + 1)}' for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, list):
        if not v:
            return "[]"
        if all(not isinstance(x, (dict, list)) for x in v):
            return "[" + ", ".join(_dump(x, indent + 1) for x in v) + "]"
        items = [pad + "  " + _dump(x, indent + 1) for x in v]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(v)


def render_json(command, params, rows, summary=None) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "params": params, "rows": rows}
    if summary is not None:
        doc["summary"] = summary
    return _dump(_jsonable(doc)) + "\n"


def render_csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        out = []
        for c in columns:
            v = r.get(c)
            if isinstance(v, float):
                v = fmt_float(v)
            elif isinstance(v, Fraction):
                v = fmt_rat(v)
            elif isinstance(v, bool):
                v = "true" if v else "false"
            out.append("" if v is None else v)
        w.writerow(out)
    return buf.getvalue()


# ---------------------------------------------------------------- parsing

def parse_int_set(text: str) -> list:
    """'a..b' (inclusive), 'a,b,c' or a mix such as '1..3,10'."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if ".." in part:
                a, b = part.split("..", 1)
                a, b = int(a), int(b)
                if b < a:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc
    if not out:
        raise UsageError("empty list")
    return sorted(set(out))


def parse_real(text: str) -> float:
    """A float, or an exact fraction like '1/2' / '-3/4'."""
    try:
        return float(Fraction(text.replace("−", "-")))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from exc


def parse_kind(text: str) -> str:
    from .zeros.core import normalize_kind

    try:
        return normalize_kind(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


# ---------------------------------------------------------------- commands

def cmd_expand(args):
    from .mcmahon import MAX_ORDER, expansion_table

    if not 0 <= args.order <= MAX_ORDER:
        raise UsageError(f"--order must lie in [0, {MAX_ORDER}]")
    numeric = args.nu is not None or args.delta is not None
    if numeric and args.symbolic:
        raise UsageError("--symbolic cannot be combined with --nu/--delta")
    if numeric and (args.nu is None or args.delta is None):
        raise UsageError("numeric mode needs both --nu and --delta")
    table = expansion_table(args.kind, args.order)
    params = {"kind": table.kind, "order": args.order, "beta_offset": table.beta_offset,
              "mode": "numeric" if numeric else "symbolic"}
    if args.export_table:
        with open(args.export_table, "w", encoding="utf-8") as fh:
            json.dump(table.to_json_dict(), fh, indent=2)
            fh.write("\n")
    if numeric:
        nu_q, d_q = Fraction(args.nu), Fraction(args.delta)
        params.update(nu=args.nu, delta=args.delta)
        rows = []
        for p, c in table.coeffs:
            v = c(4 * nu_q * nu_q, d_q)
            rows.append({"power": p, "exact": v, "value": float(v)})
        return params, rows, ["power", "exact", "value"], None
    rows = []
    for p, c in table.coeffs:
        rows.append({"power": p, "text": str(c), "terms": [
            {"mu_exp": r["mu_exp"], "delta_exp": r["delta_exp"],
             "coefficient": f'{r["num"]}/{r["den"]}'} for r in c.to_records()]})
    if args.format == "csv":
        flat = [{"power": r["power"], **t} for r in rows for t in r["terms"]]
        return params, flat, ["power", "mu_exp", "delta_exp", "coefficient"], None
    return params, rows, None, None


def cmd_zeros(args):
    from .mcmahon import eval_expansion, expansion_table
    from .zeros import ZeroQuery, find_zero, index_offset

    ks = parse_int_set(args.k)
    cap = EXPANSION_K_MAX if args.method == "expansion" else REFINED_K_MAX
    if ks[0] < 1 or ks[-1] > cap:
        raise UsageError(f"k must lie in [1, {cap}] for method {args.method}")
    if not 0 <= args.order <= 8:
        raise UsageError("--order must lie in [0, 8]")
    kind, nu, delta = args.kind, args.nu, args.delta
    table = expansion_table(kind, args.order)
    off = index_offset(kind, nu, delta)
    params = {"kind": kind, "nu": nu, "delta": delta, "method": args.method, "order": args.order,
              "indexing": "theorem" if args.paper_indexing else "positive", "index_offset": off}
    rows = []
    for k in ks:
        kt = k if args.paper_indexing else k - off
        kp = k + off if args.paper_indexing else k
        row = {"k": k, "theorem_k": kt, "positive_k": kp}
        if args.method in ("expansion", "both"):
            row["expansion"] = eval_expansion(table, nu, delta, kt) if kt >= 1 else None
        if args.method in ("refined", "both"):
            if kp < 1:
                row["refined"] = None  # the origin
            else:
                try:
                    res = find_zero(ZeroQuery(kind, nu, delta, kp, tol=args.tol))
                except ArithmeticError as exc:
                    raise NumericFailure(f"k={k}: {exc}") from exc
                row["refined"] = res.value
                row["residual"] = res.residual
                row["index_certified"] = res.index_certified
        if args.method == "both":
            e, r = row.get("expansion"), row.get("refined")
            row["abs_diff"] = abs(e - r) if e is not None and r is not None else None
        rows.append(row)
    cols = {"expansion": ["k", "theorem_k", "positive_k", "expansion"],
            "refined": ["k", "theorem_k", "positive_k", "refined", "residual", "index_certified"],
            "both": ["k", "theorem_k", "positive_k", "expansion", "refined", "abs_diff", "residual",
                     "index_certified"]}[args.method]
    return params, [{c: r.get(c) for c in cols} for r in rows], cols, None


class NumericFailure(Exception):
    pass


class VerificationFailure(Exception):
    def __init__(self, message, payload):
        super().__init__(message)
        self.payload = payload


def _parse_perturb(text):
    try:
        power, i, j = (int(t) for t in text.split(":"))
    except ValueError as exc:
        raise UsageError("--perturb expects POWER:MU_EXP:DELTA_EXP") from exc
    return power, i, j


def cmd_verify(args):
    from .mcmahon import all_symbolic_checks

    perturb = _parse_perturb(args.perturb) if args.perturb else None
    rows = []
    for res in all_symbolic_checks(perturb):
        rows.append({"check": res.name, "status": "PASS" if res.passed else "FAIL",
                     "detail": "; ".join(res.diff)})
    if args.airy:
        rows.append(_airy_row(args.airy_count))
    params = {"airy": bool(args.airy), "perturb": args.perturb}
    cols = ["check", "status", "detail"]
    failed = [r for r in rows if r["status"] != "PASS"]
    if failed:
        raise VerificationFailure(failed[0]["detail"], (params, rows, cols, None))
    return params, rows, cols, None


def _airy_row(count):
    from .specfun import bi_prime_zeros

    bad = []
    for k, t in enumerate(bi_prime_zeros(count), start=1):
        lo = (1.5 * math.pi * (k - 0.4)) ** (2.0 / 3.0)
        hi = (1.5 * math.pi * (k - 0.1)) ** (2.0 / 3.0)
        if not lo < t < hi:
            bad.append(f"k={k}: t={fmt_float(t)} outside ({fmt_float(lo)}, {fmt_float(hi)})")
    return {"check": f"Bi' zeros k<={count} inside their intervals",
            "status": "PASS" if not bad else "FAIL", "detail": "; ".join(bad)}


def cmd_study(args):
    from .zeros import convergence_study

    ks = parse_int_set(args.k)
    orders = parse_int_set(args.orders)
    if ks[0] < 1:
        raise UsageError("k must be >= 1")
    if orders[0] < 0 or orders[-1] > 8:
        raise UsageError("orders must lie in [0, 8]")
    if args.step and args.step > 1 and len(ks) > 1:
        ks = ks[:: args.step] if ks[-1] in ks[:: args.step] else ks[:: args.step] + [ks[-1]]
    try:
        study = convergence_study(args.kind, args.nu, args.delta, ks, orders)
    except ArithmeticError as exc:
        raise NumericFailure(str(exc)) from exc
    params = {"kind": study.kind, "nu": args.nu, "delta": args.delta, "orders": orders, "k": ks}
    rows = []
    for r in study.rows:
        rows.append({"order": r.order, "k": r.k, "beta_prime": r.beta_prime,
                     "expansion": r.expansion_value, "oracle": r.oracle_value,
                     "abs_error": r.abs_error, "precision_floor": r.precision_floor,
                     "fitted_slope": study.slopes[r.order]})
    summary = {"slopes": [{"order": m, "slope": study.slopes[m],
                           "bound": -(2 * m + 1) + 0.5} for m in orders]}
    cols = ["order", "k", "beta_prime", "expansion", "oracle", "abs_error", "precision_floor",
            "fitted_slope"]
    return params, rows, cols, summary


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        help="shorthand for --format json")
    common.add_argument("--out", help="write to this path instead of standard output")

    p = argparse.ArgumentParser(prog="ultrabessel", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common], help="zero-expansion coefficients")
    e.add_argument("--kind", type=parse_kind, required=True)
    e.add_argument("--order", type=int, required=True, help="keep terms through beta'^-(2*order-1)")
    e.add_argument("--symbolic", action="store_true", help="exact polynomials in mu, delta (default)")
    e.add_argument("--nu", type=parse_real)
    e.add_argument("--delta", type=parse_real)
    e.add_argument("--export-table", metavar="PATH", help="also write the coefficient table JSON")
    e.set_defaults(func=cmd_expand)

    z = sub.add_parser("zeros", parents=[common], help="zeros by expansion and/or refinement")
    z.add_argument("--kind", type=parse_kind, required=True)
    z.add_argument("--nu", type=parse_real, required=True)
    z.add_argument("--delta", type=parse_real, required=True)
    z.add_argument("--k", required=True, help="index list: 'a..b', 'a,b,c' or a mix")
    z.add_argument("--method", choices=("expansion", "refined", "both"), default="refined")
    z.add_argument("--order", type=int, default=DEFAULT_ORDER)
    z.add_argument("--tol", type=float, default=1e-14)
    z.add_argument("--paper-indexing", action="store_true",
                   help="interpret k with the expansion's index convention")
    z.set_defaults(func=cmd_zeros)

    v = sub.add_parser("verify", parents=[common], help="exact coefficient checks")
    v.add_argument("--airy", action="store_true", help="also check Bi' zero intervals")
    v.add_argument("--airy-count", type=int, default=50)
    v.add_argument("--perturb", metavar="POWER:MU_EXP:DELTA_EXP", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("study", parents=[common], help="convergence-order study")
    s.add_argument("--kind", type=parse_kind, required=True)
    s.add_argument("--nu", type=parse_real, required=True)
    s.add_argument("--delta", type=parse_real, required=True)
    s.add_argument("--orders", required=True)
    s.add_argument("--k", required=True)
    s.add_argument("--step", type=int, default=0, help="thin a k range to every step-th value")
    s.set_defaults(func=cmd_study)
    return p


def _emit(args, params, rows, cols, summary):
    if args.format == "json" or cols is None:
        text = render_json(args.command, params, rows, summary)
    else:
        text = render_csv(cols, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        params, rows, cols, summary = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericFailure as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ArithmeticError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except VerificationFailure as exc:
        _emit(args, *exc.payload)
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _emit(args, params, rows, cols, summary)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
