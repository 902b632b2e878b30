"""Command-line surface: value tables, identity suites, p-adic certificates.

Subcommands
-----------
poly N        print E_N(x)
eval N A      print E_N(a) at a rational point
numbers MAX   table n -> Euler number E_n for n <= MAX
verify IDS..  run identity checkers over a bounded grid; exit 0 iff all pass
witt          closed-form truncation vs E_n(a) valuation certificate

Exit codes: 0 = all requested checks pass, 1 = at least one identity or
valuation failure, 2 = usage/parse error. Output is deterministic: stable
ordering and no timestamps (elapsed_ms appears in JSON but carries no
ordering weight).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import identities
from .euler import euler_number, euler_poly
from .identities import SweepGrid, report_to_dict, run_suite
from .numeric import format_rational, parse_rational
from .padic import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DenominatorNotInvertible,
    fermionic_sum_closed,
    fermionic_sum_naive,
    is_odd_prime,
    witt_defect,
)

FORMATS = ("text", "json", "csv", "md")


@dataclass(frozen=True)
class RunConfig:
    """Validated options for a verify run."""

    ids: tuple
    grid: SweepGrid
    fmt: str

    def __post_init__(self):
        for p in self.grid.p_list:
            if not is_odd_prime(p):
                raise ValueError(f"p must be an odd prime, got {p}")
        if self.grid.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.grid.precision}")
        for rng in (self.grid.m, self.grid.n, self.grid.q, self.grid.k,
                    self.grid.s):
            if any(v < 0 for v in rng):
                raise ValueError("ranges must be non-negative")
        span = max((p ** self.grid.precision for p in self.grid.p_list),
                   default=0)
        if self.grid.budget < span:
            raise ValueError(
                f"budget {self.grid.budget} smaller than the requested "
                f"p**N sweep of {span} terms")


def _parse_range(text: str) -> tuple:
    """Inclusive 'lo..hi' range or a single value."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected 'lo..hi' or a single integer, got {text!r}") from None


def _parse_points(text: str) -> tuple:
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_primes(text: str) -> tuple:
    try:
        ps = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}") from None
    for p in ps:
        if not is_odd_prime(p):
            raise argparse.ArgumentTypeError(f"not an odd prime: {p}")
    return ps


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# lets bare negative rationals like -1/2 (or lists like -2/3,0) pass as
# argument values instead of being mistaken for option flags
_NEGATIVE_TOKEN = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerferm",
        description="Exact Euler-polynomial values, identity verification, "
                    "and p-adic convergence certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="print E_n(x)")
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("--format", choices=FORMATS, default="text")

    p_eval = sub.add_parser("eval", help="print E_n(a)")
    p_eval.add_argument("n", type=int)
    p_eval.add_argument("a", type=_rational_arg)

    p_num = sub.add_parser("numbers", help="table of Euler numbers E_0..E_max")
    p_num.add_argument("max", type=int)
    p_num.add_argument("--format", choices=FORMATS, default="text")

    p_ver = sub.add_parser("verify", help="run identity checkers")
    p_ver.add_argument("ids", nargs="+",
                       help="checker ids, or 'all' for the whole catalog")
    p_ver.add_argument("--m", type=_parse_range)
    p_ver.add_argument("--n", type=_parse_range)
    p_ver.add_argument("--q", type=_parse_range)
    p_ver.add_argument("--k", type=_parse_range)
    p_ver.add_argument("--s", type=_parse_range)
    p_ver.add_argument("--points", type=_parse_points)
    p_ver.add_argument("--p", type=_parse_primes, dest="p_list")
    p_ver.add_argument("--precision", type=int)
    p_ver.add_argument("--budget", type=int)
    p_ver.add_argument("--format", choices=FORMATS, default="text")

    p_witt = sub.add_parser("witt", help="p-adic convergence certificate")
    p_witt.add_argument("--p", type=int, required=True)
    p_witt.add_argument("--precision", type=int, required=True)
    p_witt.add_argument("--n", type=int, required=True)
    p_witt.add_argument("--a", type=_rational_arg, required=True)
    p_witt.add_argument("--naive", action="store_true",
                        help="also run the p**N-term naive sum and require "
                             "exact agreement with the closed form")
    p_witt.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_witt.add_argument("--format", choices=FORMATS, default="text")

    for sp in (p_eval, p_ver, p_witt):
        sp._negative_number_matcher = _NEGATIVE_TOKEN

    return parser


def _print_poly(p, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(p.to_coeff_strings()))
    elif fmt == "csv":
        print(",".join(p.to_coeff_strings()))
    elif fmt == "md":
        print(f"`{p}`")
    else:
        print(p)


def _print_numbers(limit: int, fmt: str) -> None:
    rows = [(n, euler_number(n)) for n in range(limit + 1)]
    if fmt == "json":
        print(json.dumps([{"n": n, "euler_number": v} for n, v in rows]))
    elif fmt == "csv":
        print("n,euler_number")
        for n, v in rows:
            print(f"{n},{v}")
    elif fmt == "md":
        print("| n | E_n |")
        print("| - | --- |")
        for n, v in rows:
            print(f"| {n} | {v} |")
    else:
        for n, v in rows:
            print(f"{n}\t{v}")


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={_param_str(v)}" for k, v in params.items())


def _param_str(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


def _residual_text(rendered) -> str:
    if isinstance(rendered, list):
        return json.dumps(rendered) if rendered else "0"
    return str(rendered)


def _emit_reports(reports, fmt: str) -> None:
    dicts = [report_to_dict(r) for r in reports]
    passed = sum(1 for r in reports if r.passed)
    summary = (f"PASS {passed}/{len(reports)}" if passed == len(reports)
               else f"FAIL {len(reports) - passed}/{len(reports)}")
    if fmt == "json":
        print(json.dumps(dicts, indent=2))
    elif fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["id", "params", "mode", "residual", "pass",
                         "elapsed_ms"])
        for d in dicts:
            writer.writerow([d["id"], json.dumps(d["params"]), d["mode"],
                             json.dumps(d["residual"]), d["pass"],
                             f"{d['elapsed_ms']:.3f}"])
        sys.stdout.write(out.getvalue())
    elif fmt == "md":
        print("| id | params | mode | residual | pass |")
        print("| -- | ------ | ---- | -------- | ---- |")
        for r, d in zip(reports, dicts):
            print(f"| {d['id']} | {_params_text(r.params)} | {d['mode']} "
                  f"| {_residual_text(d['residual'])} "
                  f"| {'PASS' if d['pass'] else 'FAIL'} |")
    else:
        for r, d in zip(reports, dicts):
            print(f"{'PASS' if d['pass'] else 'FAIL'} {d['id']} "
                  f"{_params_text(r.params)} "
                  f"residual={_residual_text(d['residual'])}")
    print(summary)


def _cmd_verify(args) -> int:
    defaults = SweepGrid()
    given = lambda value, fallback: fallback if value is None else value
    grid = SweepGrid(
        m=given(args.m, defaults.m),
        n=given(args.n, defaults.n),
        q=given(args.q, defaults.q),
        k=given(args.k, defaults.k),
        s=given(args.s, defaults.s),
        points=given(args.points, defaults.points),
        p_list=given(args.p_list, defaults.p_list),
        precision=given(args.precision, defaults.precision),
        budget=given(args.budget, defaults.budget),
    )
    ids = list(args.ids)
    if "all" in ids:
        ids = list(identities.CHECKER_IDS)
    try:
        config = RunConfig(ids=tuple(ids), grid=grid, fmt=args.format)
        reports = run_suite(config.ids, config.grid)
    except (ValueError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_reports(reports, args.format)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_witt(args) -> int:
    try:
        if not is_odd_prime(args.p):
            raise ValueError(f"p must be an odd prime, got {args.p}")
        if args.precision < 1:
            raise ValueError(f"precision must be >= 1, got {args.precision}")
        if args.n < 0:
            raise ValueError(f"n must be >= 0, got {args.n}")
        span = args.p ** args.precision
        closed = fermionic_sum_closed(args.n, args.a, span)
        exact = euler_poly(args.n)(args.a)
        defect = witt_defect(args.n, args.a, args.p, args.precision)
        naive = None
        if args.naive:
            naive = fermionic_sum_naive(
                lambda x: (x + args.a) ** args.n, args.p, args.precision,
                args.budget)
    except (ValueError, DenominatorNotInvertible, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    naive_matches = None if naive is None else naive == closed
    passed = defect >= args.precision and naive_matches is not False
    defect_str = "inf" if defect == float("inf") else str(int(defect))

    if args.format == "json":
        print(json.dumps({
            "p": args.p, "precision": args.precision, "n": args.n,
            "a": format_rational(args.a),
            "closed_sum": format_rational(closed),
            "euler_value": format_rational(exact),
            "defect": defect_str if defect == float("inf") else int(defect),
            "naive_matches": naive_matches,
            "pass": passed,
        }))
    elif args.format == "csv":
        print("p,precision,n,a,closed_sum,euler_value,defect,naive_matches,pass")
        print(f"{args.p},{args.precision},{args.n},{format_rational(args.a)},"
              f"{format_rational(closed)},{format_rational(exact)},"
              f"{defect_str},{naive_matches},{passed}")
    elif args.format == "md":
        print("| p | N | n | a | S_N | E_n(a) | defect | pass |")
        print("| - | - | - | - | --- | ------ | ------ | ---- |")
        print(f"| {args.p} | {args.precision} | {args.n} "
              f"| {format_rational(args.a)} | {format_rational(closed)} "
              f"| {format_rational(exact)} | {defect_str} "
              f"| {'PASS' if passed else 'FAIL'} |")
    else:
        print(f"p = {args.p}, N = {args.precision}, n = {args.n}, "
              f"a = {format_rational(args.a)}")
        print(f"S_N (closed)  = {format_rational(closed)}")
        print(f"E_n(a)        = {format_rational(exact)}")
        print(f"defect v_p    = {defect_str}")
        if naive is not None:
            verdict = "matches closed form" if naive_matches else "MISMATCH"
            print(f"naive sum     = {format_rational(naive)} ({verdict})")
        print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "poly":
        if args.n < 0:
            print("error: n must be >= 0", file=sys.stderr)
            return 2
        _print_poly(euler_poly(args.n), args.format)
        return 0
    if args.command == "eval":
        if args.n < 0:
            print("error: n must be >= 0", file=sys.stderr)
            return 2
        print(format_rational(euler_poly(args.n)(args.a)))
        return 0
    if args.command == "numbers":
        if args.max < 0:
            print("error: max must be >= 0", file=sys.stderr)
            return 2
        _print_numbers(args.max, args.format)
        return 0
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "witt":
        return _cmd_witt(args)
    return 2


def entrypoint() -> None:
    sys.exit(main())
