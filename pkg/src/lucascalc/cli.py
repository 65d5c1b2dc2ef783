"""Command-line front end: evaluate, tabulate, verify, find the sine zero,
and integrate, with json/csv/plain output.

Exit codes: 0 success, 2 usage or parse failure, 3 domain or numeric error,
4 no root found.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .calculus import integral_value
from .errors import LucasError, NoRootFound, UnknownIdentityId
from .functions import FnKind, find_pi_u, fn_value_info
from .identities import run_suite
from .scalars import GaussianRational, lucas_u, lucas_v, make_params

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NO_ROOT = 4


def _number(text: str) -> float:
    """Parse a float or a p/q rational literal into a float."""
    text = text.strip()
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def _exact_number(text: str) -> Fraction:
    return Fraction(text.strip())


def _jsonable(value):
    if isinstance(value, (Fraction, GaussianRational)):
        return str(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def _emit(rows: list[dict], fmt: str, out) -> None:
    """Render a list of uniform records as json, csv, or aligned plain text."""
    rows = [{k: _jsonable(v) for k, v in row.items()} for row in rows]
    if fmt == "json":
        json.dump(rows if len(rows) != 1 else rows[0], out, indent=2, default=str)
        out.write("\n")
    elif fmt == "csv":
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
    else:
        for row in rows:
            out.write("\t".join(f"{k}={v}" if len(rows) == 1 else str(v) for k, v in row.items()))
            out.write("\n")


def _cmd_seq(args) -> int:
    if args.exact:
        params = make_params(_exact_number(args.s), _exact_number(args.t))
    else:
        params = make_params(_number(args.s), _number(args.t))
    term = lucas_v if args.companion else lucas_u
    rows = [{"k": k, "value": term(k, params)} for k in range(args.n + 1)]
    _emit(rows, args.format, sys.stdout)
    return EXIT_OK


def _cmd_eval(args) -> int:
    params = make_params(_number(args.s), _number(args.t))
    info = fn_value_info(FnKind(args.fn), _number(args.x), _number(args.u), params, args.eps)
    rows = [
        {
            "fn": args.fn,
            "s": params.s,
            "t": params.t,
            "u": _number(args.u),
            "x": _number(args.x),
            "value": info.value,
            "termsUsed": info.terms_used,
        }
    ]
    _emit(rows, args.format, sys.stdout)
    return EXIT_OK


def _cmd_table(args) -> int:
    start, stop, step = _number(getattr(args, "from")), _number(args.to), _number(args.step)
    if step <= 0 or start > stop:
        print("table range needs step > 0 and from <= to", file=sys.stderr)
        return EXIT_USAGE
    params = make_params(_number(args.s), _number(args.t))
    u = _number(args.u)
    kind = FnKind(args.fn)
    count = int(round((stop - start) / step)) + 1
    rows = []
    for i in range(count):
        x = start + i * step
        if x > stop + 1e-12:
            break
        try:
            value = fn_value_info(kind, x, u, params, args.eps).value
            rows.append({"x": x, "value": value, "diverged": False})
        except LucasError:
            rows.append({"x": x, "value": None, "diverged": True})
    _emit(rows, args.format, sys.stdout)
    return EXIT_OK


def _cmd_verify(args) -> int:
    selection = "all" if args.suite == "all" else [token.strip() for token in args.suite.split(",")]
    report = run_suite(selection, trials=args.trials, order=args.order, seed=args.seed)
    if args.format == "json":
        json.dump(report.to_dict(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["id", "group", "status", "trials", "seed", "failures", "wall_time_s"])
        for r in report.results:
            writer.writerow(
                [r.id, r.group, r.status, r.trials, r.seed, len(r.failures), f"{r.wall_time_s:.4f}"]
            )
    else:
        for r in report.results:
            print(f"{r.status.upper():4} {r.id} (trials={r.trials}, {r.wall_time_s:.3f}s)")
            for f in r.failures[:3]:
                print(f"     counterexample {f.params} lhs={f.lhs} rhs={f.rhs}")
        passed = sum(1 for r in report.results if r.status == "pass")
        print(f"suite: {'PASS' if report.all_passed else 'FAIL'} "
              f"({passed}/{len(report.results)} identities, {report.wall_time_s:.1f}s, seed={report.seed})")
    return EXIT_OK if report.all_passed else EXIT_DOMAIN


def _cmd_piu(args) -> int:
    params = make_params(_number(args.s), _number(args.t))
    root = find_pi_u(params, _number(args.u), x_max=args.xmax)
    rows = [{"s": params.s, "t": params.t, "u": _number(args.u), "piU": root.value, "residual": root.residual}]
    _emit(rows, args.format, sys.stdout)
    return EXIT_OK


def _cmd_integrate(args) -> int:
    try:
        coeffs = [float(Fraction(c)) for c in args.poly.split(",")]
    except (ValueError, ZeroDivisionError):
        print("--poly expects a comma-separated coefficient list, constant first", file=sys.stderr)
        return EXIT_USAGE
    params = make_params(_number(args.s), _number(args.t))

    def poly(x):
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    value = integral_value(poly, _number(args.a), _number(args.b), params, args.eps)
    rows = [{"poly": args.poly, "s": params.s, "t": params.t, "a": _number(args.a), "b": _number(args.b), "value": value}]
    _emit(rows, args.format, sys.stdout)
    return EXIT_OK


def _add_common(sub, *, u: bool = False) -> None:
    sub.add_argument("--s", required=True, help="first sequence parameter (float or p/q)")
    sub.add_argument("--t", required=True, help="second sequence parameter (float or p/q)")
    if u:
        sub.add_argument("--u", required=True, help="deformation parameter (float or p/q)")
    sub.add_argument("--format", choices=("plain", "json", "csv"), default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucascalc",
        description="Sequence calculus, deformed special functions, and the identity suite.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    seq = subs.add_parser("seq", help="tabulate the sequence {0..n} or its companion")
    _add_common(seq)
    seq.add_argument("--n", type=int, required=True, help="last index to print")
    seq.add_argument("--companion", action="store_true", help="print the companion sequence")
    seq.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    seq.set_defaults(func=_cmd_seq)

    ev = subs.add_parser("eval", help="evaluate a function family member at a point")
    ev.add_argument("--fn", required=True, choices=[k.value for k in FnKind])
    _add_common(ev, u=True)
    ev.add_argument("--x", required=True, help="evaluation point")
    ev.add_argument("--eps", type=float, default=1e-12)
    ev.set_defaults(func=_cmd_eval)

    table = subs.add_parser("table", help="tabulate a function over a grid")
    table.add_argument("--fn", required=True, choices=[k.value for k in FnKind])
    _add_common(table, u=True)
    table.add_argument("--from", required=True, help="grid start")
    table.add_argument("--to", required=True, help="grid end (inclusive)")
    table.add_argument("--step", required=True, help="grid step")
    table.add_argument("--eps", type=float, default=1e-12)
    table.set_defaults(func=_cmd_table)

    verify = subs.add_parser("verify", help="run the identity suite")
    verify.add_argument("--suite", default="all", help="all, a group name, an id, or a comma list")
    verify.add_argument("--trials", type=int, default=25)
    verify.add_argument("--order", type=int, default=16)
    verify.add_argument("--seed", type=int, default=7)
    verify.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    verify.set_defaults(func=_cmd_verify)

    piu = subs.add_parser("piu", help="first positive zero of the sine family member")
    _add_common(piu, u=True)
    piu.add_argument("--xmax", type=float, default=10.0)
    piu.set_defaults(func=_cmd_piu)

    integrate = subs.add_parser("integrate", help="definite node-series integral of a polynomial")
    integrate.add_argument("--poly", required=True, help="comma-separated coefficients, constant first")
    integrate.add_argument("--s", required=True)
    integrate.add_argument("--t", required=True)
    integrate.add_argument("--a", required=True, help="lower endpoint")
    integrate.add_argument("--b", required=True, help="upper endpoint")
    integrate.add_argument("--eps", type=float, default=1e-12)
    integrate.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    integrate.set_defaults(func=_cmd_integrate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UnknownIdentityId,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoRootFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    except LucasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
