"""Command-line front end: compute objects, verify identities, scan grids.

Exit codes: 0 pass, 1 verification failure, 2 invalid input, 3 internal
divisibility failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import factorial
from typing import Any, Iterator

from . import altsum, catalan
from .altsum import CyclicParams
from .qcombinat import InvalidRange, NegativeIndex
from .qpoly import IntPoly, NotDivisible

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_NOT_DIVISIBLE = 3

_FAMILY_CHECKS = {
    "A": {"positivity", "q1-specialization"},
    "B": {"positivity", "q1-specialization"},
    "C": {"positivity", "oracle-equivalence", "q1-specialization"},
    "F": {"positivity", "reciprocity", "degree-bound", "deletion", "q1-specialization"},
}


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpos",
        description="Exact computation and verification of q-combinatorial positivity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one object and print it")
    p_compute.add_argument("family", choices=["A", "B", "C", "F"])
    p_compute.add_argument("params", nargs="*", type=int, help="positional integer parameters (A m n; B n m; C m n)")
    p_compute.add_argument("--m", type=_int_list, help="comma-separated m-vector (family F)")
    p_compute.add_argument("--n", type=_int_list, help="comma-separated n-vector (family F)")
    p_compute.add_argument("--a", type=int)
    p_compute.add_argument("--b", type=int)
    p_compute.add_argument("--unsafe-params", action="store_true")

    p_verify = sub.add_parser("verify", help="verify a named identity at one point")
    p_verify.add_argument(
        "identity",
        choices=["double-expansion", "reciprocity", "product", "deletion", "recombine"],
    )
    p_verify.add_argument("--N", type=int)
    p_verify.add_argument("--h", type=int)
    p_verify.add_argument("--m", type=_int_list)
    p_verify.add_argument("--n", type=_int_list)
    p_verify.add_argument("--a", type=int)
    p_verify.add_argument("--b", type=int)
    p_verify.add_argument("--m1", type=int)
    p_verify.add_argument("--m2", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--ell", type=int)
    p_verify.add_argument("--unsafe-params", action="store_true")

    p_scan = sub.add_parser("scan", help="scan a parameter grid and emit reports")
    p_scan.add_argument("family", choices=["A", "B", "C", "F"])
    p_scan.add_argument("--max-sum", type=int, help="bound on m+n (A, C) or on n (B)")
    p_scan.add_argument("--r", type=int, help="length of the m-vector (family F)")
    p_scan.add_argument("--s", type=int, help="length of the n-vector (family F)")
    p_scan.add_argument("--param-max", type=int, help="upper bound for every vector entry (family F)")
    p_scan.add_argument("--m-min", type=int, default=1, help="lower bound for m entries (family F)")
    p_scan.add_argument("--a", type=_int_list, help="restrict to these a values (family F)")
    p_scan.add_argument("--b", type=_int_list, help="restrict to these b values (family F)")
    p_scan.add_argument("--checks", type=str, default="positivity", help="comma-separated check names")
    p_scan.add_argument("--format", choices=["json", "jsonl", "csv", "text"], default="jsonl")
    p_scan.add_argument("--out", type=str, help="write the report to this file instead of stdout")
    p_scan.add_argument("--unsafe-params", action="store_true")
    return parser


def _poly_human(p: IntPoly) -> str:
    return str(p)


def _compute_poly(args: argparse.Namespace) -> IntPoly:
    if args.family == "F":
        if args.m is None or args.n is None or args.a is None or args.b is None:
            raise InvalidRange("family F needs --m, --n, --a, --b")
        params = CyclicParams(args.m, args.n, args.a, args.b, args.unsafe_params)
        return altsum.F(params)
    if len(args.params) != 2:
        raise InvalidRange(f"family {args.family} takes exactly two integer parameters")
    x, y = args.params
    if args.family == "A":
        return catalan.super_catalan_A(x, y)
    if args.family == "B":
        return catalan.ratio_B(x, y)
    return catalan.odd_super_catalan_direct(x, y)


def cmd_compute(args: argparse.Namespace) -> int:
    poly = _compute_poly(args)
    print(_poly_human(poly))
    print(json.dumps(poly.to_coeff_strings()))
    return EXIT_PASS


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidRange(f"missing flags: {', '.join('--' + n for n in missing)}")


def cmd_verify(args: argparse.Namespace) -> int:
    name = args.identity
    if name == "double-expansion":
        _require(args, "N", "h")
        result = catalan.double_expansion_check(args.N, args.h)
    elif name == "reciprocity":
        _require(args, "m", "n", "a", "b")
        params = CyclicParams(args.m, args.n, args.a, args.b, args.unsafe_params)
        result = altsum.reciprocity_check(params)
    elif name == "deletion":
        _require(args, "m", "n", "a", "b")
        params = CyclicParams(args.m, args.n, args.a, args.b, args.unsafe_params)
        result = altsum.deletion_check(params)
    elif name == "product":
        _require(args, "m1", "m2", "k")
        result = altsum.product_identity_check(args.m1, args.m2, args.k)
    else:
        _require(args, "m", "n", "ell", "k")
        result = altsum.recombine_check(args.m, args.n, args.ell, args.k)
    if result.passed:
        print(f"PASS {result.identity} {json.dumps(result.params, sort_keys=True, default=list)}")
        return EXIT_PASS
    print(f"FAIL {result.identity} {json.dumps(result.params, sort_keys=True, default=list)}")
    print(f"difference: {result.difference}")
    return EXIT_FAIL


def _pair_value_at_one(family: str, x: int, y: int) -> int:
    if family == "A":
        num = factorial(2 * x) * factorial(2 * y)
        den = factorial(x + y) * factorial(x) * factorial(y)
    elif family == "B":
        num = factorial(2 * x) * factorial(y)
        den = factorial(x) * factorial(2 * y) * factorial(x - y)
    else:
        return catalan.odd_super_catalan_value_at_one(x, y)
    return num // den


def _pair_rows(family: str, args: argparse.Namespace, checks: list[str]) -> Iterator[dict[str, Any]]:
    if args.max_sum is None or args.max_sum < 0:
        raise InvalidRange("scan of A/B/C needs --max-sum >= 0")
    bound = args.max_sum
    if family == "B":
        grid = [(n, m) for n in range(bound + 1) for m in range(n + 1)]
    else:
        grid = [(m, n) for m in range(bound + 1) for n in range(bound - m + 1)]
    compute = {
        "A": catalan.super_catalan_A,
        "B": catalan.ratio_B,
        "C": catalan.odd_super_catalan_direct,
    }[family]
    names = ("n", "m") if family == "B" else ("m", "n")
    for x, y in grid:
        poly = compute(x, y)
        passed: list[str] = []
        failed: list[str] = []
        for check in checks:
            if check == "positivity":
                (passed if poly.is_nonneg() else failed).append(check)
            elif check == "oracle-equivalence":
                ok = catalan.odd_super_catalan_recursive(x, y) == poly
                (passed if ok else failed).append(check)
            elif check == "q1-specialization":
                ok = poly.eval_at_one() == _pair_value_at_one(family, x, y)
                (passed if ok else failed).append(check)
        yield {
            "family": family,
            "params": {names[0]: x, names[1]: y},
            "is_polynomial": True,
            "coeffs": poly.to_coeff_strings(),
            "degree": poly.degree,
            "nonneg": poly.is_nonneg(),
            "value_at_one": str(poly.eval_at_one()),
            "checks_passed": passed,
            "checks_failed": failed,
        }


def _f_rows(args: argparse.Namespace, checks: list[str]) -> Iterator[dict[str, Any]]:
    from itertools import product

    if args.r is None or args.s is None or args.param_max is None:
        raise InvalidRange("scan of F needs --r, --s and --param-max")
    if args.r < 2 or args.s < 2 or args.param_max < 1 or args.m_min < 0:
        raise InvalidRange("scan of F needs r, s >= 2 and param-max >= 1 and m-min >= 0")
    a_values = list(args.a) if args.a is not None else list(range(args.s + 1))
    b_values = list(args.b) if args.b is not None else list(range(1, args.r + 1))
    m_grid = product(range(args.m_min, args.param_max + 1), repeat=args.r)
    n_range = list(product(range(1, args.param_max + 1), repeat=args.s))
    for m in m_grid:
        for n in n_range:
            for a in a_values:
                for b in b_values:
                    params = CyclicParams(m, n, a, b, args.unsafe_params)
                    yield _f_row(params, checks)


def _f_row(params: CyclicParams, checks: list[str]) -> dict[str, Any]:
    report = altsum.positivity_report(params)
    passed: list[str] = []
    failed: list[str] = []
    for check in checks:
        if check == "positivity":
            ok = report.is_polynomial and report.nonneg
        elif check == "degree-bound":
            bound = altsum.delta(params.m, params.n)
            ok = report.is_polynomial and (report.degree is None or report.degree <= bound)
        elif check == "reciprocity":
            try:
                ok = altsum.reciprocity_check(params).passed
            except (NotDivisible, InvalidRange):
                ok = False
        elif check == "deletion":
            if params.r < 3 or params.b < 2:
                continue  # recurrence undefined here; skipped, not failed
            try:
                ok = altsum.deletion_check(params).passed
            except NotDivisible:
                ok = False
        elif check == "q1-specialization":
            ref = altsum.value_at_one_reference(params)
            ok = report.is_polynomial and ref.denominator == 1 and int(ref) == report.value_at_one
        else:
            continue
        (passed if ok else failed).append(check)
    return {
        "family": "F",
        "params": {"m": list(params.m), "n": list(params.n), "a": params.a, "b": params.b},
        "out_of_theorem": not params.in_theorem(),
        "is_polynomial": report.is_polynomial,
        "coeffs": report.poly.to_coeff_strings() if report.poly is not None else None,
        "degree": report.degree,
        "nonneg": report.nonneg,
        "value_at_one": str(report.value_at_one),
        "checks_passed": passed,
        "checks_failed": failed,
    }


def _params_csv(params: dict[str, Any]) -> str:
    parts = []
    for key, value in params.items():
        if isinstance(value, list):
            parts.append(f"{key}={','.join(str(v) for v in value)}")
        else:
            parts.append(f"{key}={value}")
    return ";".join(parts)


def _emit(rows: list[dict[str, Any]], fmt: str, stream: io.TextIOBase) -> None:
    if fmt == "jsonl":
        for row in rows:
            stream.write(json.dumps(row, sort_keys=True, separators=(",", ":")) + "\n")
    elif fmt == "json":
        stream.write(json.dumps(rows, sort_keys=True, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(
            ["family", "params", "degree", "nonneg", "value_at_one", "checks_passed", "checks_failed"]
        )
        for row in rows:
            writer.writerow(
                [
                    row["family"],
                    _params_csv(row["params"]),
                    "" if row["degree"] is None else row["degree"],
                    int(row["nonneg"]),
                    row["value_at_one"],
                    ";".join(row["checks_passed"]),
                    ";".join(row["checks_failed"]),
                ]
            )
    else:
        for row in rows:
            verdict = "ok" if not row["checks_failed"] else "FAIL " + ";".join(row["checks_failed"])
            stream.write(
                f"{row['family']} {_params_csv(row['params'])} degree={row['degree']} "
                f"nonneg={int(row['nonneg'])} value_at_one={row['value_at_one']} {verdict}\n"
            )


def cmd_scan(args: argparse.Namespace) -> int:
    checks = [c for c in args.checks.split(",") if c]
    if not checks:
        raise InvalidRange("no checks requested")
    allowed = _FAMILY_CHECKS[args.family]
    unknown = [c for c in checks if c not in allowed]
    if unknown:
        raise InvalidRange(f"checks not applicable to family {args.family}: {', '.join(unknown)}")
    if args.family == "F":
        rows = list(_f_rows(args, checks))
    else:
        rows = list(_pair_rows(args.family, args, checks))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _emit(rows, args.format, fh)
    else:
        _emit(rows, args.format, sys.stdout)
    failures = sum(1 for row in rows if row["checks_failed"])
    print(f"scanned {len(rows)} instances, {failures} failures", file=sys.stderr)
    return EXIT_PASS if failures == 0 else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_scan(args)
    except (InvalidRange, NegativeIndex, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotDivisible as exc:
        print(f"divisibility failure: {exc}", file=sys.stderr)
        return EXIT_NOT_DIVISIBLE


if __name__ == "__main__":
    sys.exit(main())
