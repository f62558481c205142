"""Command-line front end: ``degenpoly table|poly|series|verify``.

Data goes to stdout as newline-delimited JSON or CSV; diagnostics go to
stderr.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Optional, Sequence

from .algebra import BiPoly, LambdaPoly, Series, format_poly, parse_rational
from .functions import (
    bell_poly_deg,
    binomial_series,
    carlitz_euler,
    degenerate_exp,
    degenerate_log,
    degenerate_sech,
    harmonic_poly_deg,
    jindalrae1,
    jindalrae2,
    stirling1_deg,
    stirling2_deg,
    type2_changhee,
    type2_euler_deg,
)
from .harness import CHECKS, run_all

TRIANGLES = {"s1": stirling1_deg, "s2": stirling2_deg, "j1": jindalrae1, "j2": jindalrae2}
POLY_FAMILIES = ("euler2", "euler", "changhee2", "bell", "harmonic-poly")
SERIES_NAMES = ("exp", "log", "sech", "harmonic-ogf", "genharmonic-ogf")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _evaluate(p, lam=None, x=None) -> str:
    if isinstance(p, LambdaPoly):
        p = BiPoly.constant(p)
    if x is not None:
        p = BiPoly.constant(p.eval_x(x))
    if lam is not None:
        p = p.eval_lambda(lam)
    return format_poly(p)


def _emit(records: Iterable[dict], header: Sequence[str], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for rec in records:
            writer.writerow([rec[h] for h in header])


def cmd_table(args, out) -> int:
    tri = TRIANGLES[args.family](args.nmax)
    records = (
        {"family": args.family, "n": n, "k": k, "value": _evaluate(v, lam=args.lam)}
        for n, k, v in tri.entries()
    )
    _emit(records, ("family", "n", "k", "value"), args.format, out)
    return 0


def _poly_sequence(family: str, r: Optional[int], nmax: int, route: Optional[str]):
    if family == "bell":
        if r not in (None, 0):
            raise ValueError("family bell takes no --order")
        return bell_poly_deg(nmax)
    if family == "harmonic-poly":
        r = 0 if r is None else r
        return harmonic_poly_deg(r, nmax, route)
    if route is not None:
        raise ValueError(f"--route applies only to harmonic-poly, not {family}")
    r = 1 if r is None else r
    if r < 1:
        raise ValueError(f"family {family} needs --order >= 1")
    build = {"euler2": type2_euler_deg, "euler": carlitz_euler, "changhee2": type2_changhee}[family]
    return build(r, nmax)


def cmd_poly(args, out) -> int:
    seq = _poly_sequence(args.family, args.order, args.nmax, args.route)
    records = (
        {"family": args.family, "r": seq.order, "n": n, "value": _evaluate(v, lam=args.lam, x=args.x)}
        for n, v in enumerate(seq)
    )
    _emit(records, ("family", "r", "n", "value"), args.format, out)
    return 0


def _named_series(name: str, order: int, r: Optional[int], x) -> Series:
    if name == "exp":
        return degenerate_exp(order, x)
    if name == "log":
        return degenerate_log(order)
    if name == "sech":
        return degenerate_sech(order) ** (1 if r is None else r)
    neg_log = -degenerate_log(order + (r or 0) + 1).scale_variable(-1)
    one_minus_t = Series((1, -1), neg_log.order)
    if name == "harmonic-ogf":
        if r is None:
            return (neg_log / one_minus_t).truncate(order)
        gf = neg_log ** (r + 1) * binomial_series(neg_log.order, sign=-1, shift=-1)
        return gf.divide_by_t(1).truncate(order)
    # genharmonic-ogf
    r = r or 0
    return (neg_log ** (r + 1) / one_minus_t).divide_by_t(r + 1).truncate(order)


def cmd_series(args, out) -> int:
    s = _named_series(args.name, args.order, args.r, args.x)
    records = (
        {"name": args.name, "r": "" if args.r is None else args.r, "n": n, "value": _evaluate(c, lam=args.lam, x=args.x)}
        for n, c in enumerate(s.coeffs)
    )
    _emit(records, ("name", "r", "n", "value"), args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    reports = run_all(args.nmax, args.rmax, args.seed, args.ids)
    if args.format == "json":
        for rep in reports:
            out.write(rep.to_json() + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(("id", "status", "cases", "ranges", "counterexample"))
        for rep in reports:
            d = rep.to_dict()
            ce = json.dumps(d["counterexample"], ensure_ascii=False) if "counterexample" in d else ""
            writer.writerow((rep.id, rep.status, rep.cases, json.dumps(rep.ranges), ce))
    for rep in reports:
        if not rep.passed:
            print(str(rep), file=sys.stderr)
    return 0 if all(rep.passed for rep in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degenpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_lambda=True):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if with_lambda:
            p.add_argument("--lambda", dest="lam", type=_rational, default=None, help="evaluate at this λ")

    p = sub.add_parser("table", help="degenerate Stirling-type triangles")
    p.add_argument("--family", choices=tuple(TRIANGLES), required=True)
    p.add_argument("--nmax", type=_nonneg, default=10)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("poly", help="polynomial sequences in x")
    p.add_argument("--family", choices=POLY_FAMILIES, required=True)
    p.add_argument("--order", type=_nonneg, default=None, help="order r of the family")
    p.add_argument("--nmax", type=_nonneg, default=10)
    p.add_argument("--route", choices=("ogf", "explicit"), default=None)
    p.add_argument("--x", type=_rational, default=None, help="evaluate at this x")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("series", help="plain coefficients of a generating function")
    p.add_argument("--name", choices=SERIES_NAMES, required=True)
    p.add_argument("--order", type=_nonneg, required=True, help="truncation order N")
    p.add_argument("--r", type=_nonneg, default=None, help="power / order parameter")
    p.add_argument("--x", type=_rational, default=None)
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--nmax", type=_nonneg, default=10)
    p.add_argument("--rmax", type=_nonneg, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ids", default=None, help="comma-separated identity ids: " + ", ".join(CHECKS))
    common(p, with_lambda=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if out is None:
        if hasattr(sys.stdout, "reconfigure"):
            sys.stdout.reconfigure(encoding="utf-8")
        out = sys.stdout
    if args.command == "verify" and args.ids is not None:
        args.ids = [i.strip() for i in args.ids.split(",") if i.strip()]
        unknown = [i for i in args.ids if i not in CHECKS]
        if unknown:
            print(f"degenpoly verify: unknown identity id(s): {', '.join(unknown)}", file=sys.stderr)
            return 2
    try:
        return args.func(args, out)
    except ValueError as exc:
        print(f"degenpoly {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
