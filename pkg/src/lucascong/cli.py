"""Command-line front end: single verifications, parameter-space scans, and
q-congruence checks, emitting machine-readable report lines.

Output is one record per line (JSON by default, flat CSV with ``--csv``)
with the fixed field order A, B, n, w, modulus, lhs, rhs, holds, trivial,
degenerate, kind. Integers are rendered as decimal strings so arbitrary
precision survives any downstream parser. Exit codes: 0 = all verified,
1 = at least one violation / failed congruence, 2 = usage, I/O, or
degenerate-input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .congruence import (CongruenceReport, verify_corollary_fib,
                         verify_kimball_webb, verify_theorem,
                         verify_wolstenholme)
from .errors import CongruenceFails, DegenerateSequence, InvalidArgument
from .lucas import LucasParams, lucas_table, rank_of_apparition
from .primitive import primitive_part
from .qpoly import q_certificate

FIELDS = ("A", "B", "n", "w", "modulus", "lhs", "rhs",
          "holds", "trivial", "degenerate", "kind")


def _s(x):
    """Integers become decimal strings; None stays None."""
    return None if x is None else str(x)


def report_record(report: CongruenceReport, kind: str) -> dict:
    rec = {
        "A": _s(report.a),
        "B": _s(report.b),
        "n": _s(report.n),
        "w": _s(report.w),
        "modulus": _s(report.modulus),
        "lhs": _s(report.lhs_residue),
        "rhs": _s(report.rhs_residue),
        "holds": report.holds,
        "trivial": report.trivial,
        "degenerate": report.degenerate,
        "kind": kind,
    }
    if report.rank_used is not None:
        rec["rank"] = _s(report.rank_used)
    if not report.applicable:
        rec["applicable"] = False
    if report.error is not None:
        rec["error"] = report.error
    return rec


def _render(rec: dict, csv_mode: bool) -> str:
    if not csv_mode:
        return json.dumps(rec)
    cells = []
    for f in FIELDS:
        v = rec.get(f)
        if v is None:
            cells.append("")
        elif isinstance(v, bool):
            cells.append("true" if v else "false")
        else:
            cells.append(str(v))
    return ",".join(cells)


def _csv_header() -> str:
    return ",".join(FIELDS)


def _emit(lines, out_path, csv_mode):
    text = "".join(line + "\n" for line in lines)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> LucasParams:
    return LucasParams(args.A, args.B)


# --- subcommand implementations -------------------------------------------

def cmd_verify(args) -> int:
    report = verify_theorem(_params(args), args.n)
    lines = [_csv_header()] if args.csv else []
    lines.append(_render(report_record(report, "theorem"), args.csv))
    _emit(lines, None, args.csv)
    if report.degenerate or report.error is not None:
        return 2
    return 0 if report.holds else 1


def _is_violation(report: CongruenceReport) -> bool:
    return (report.in_hypothesis and report.applicable
            and report.error is None and not report.degenerate
            and not report.holds)


def _scan_cell(cell) -> list[CongruenceReport]:
    a, b, n_min, n_max = cell
    params = LucasParams(a, b)
    table = lucas_table(params, n_max)
    return [verify_theorem(params, n, table) for n in range(n_min, n_max + 1)]


def cmd_scan(args) -> int:
    if args.a_min > args.a_max or args.b_min > args.b_max:
        raise InvalidArgument("empty A or B range")
    if args.n_min > args.n_max or args.n_min < 1:
        raise InvalidArgument("n range must be nonempty with n-min >= 1")
    cells = [(a, b, args.n_min, args.n_max)
             for a in range(args.a_min, args.a_max + 1) if a != 0
             for b in range(args.b_min, args.b_max + 1) if b != 0]
    if not cells:
        raise InvalidArgument("A and B ranges contain only zero")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            per_cell = list(pool.map(_scan_cell, cells, chunksize=4))
    else:
        per_cell = [_scan_cell(c) for c in cells]
    reports = [r for chunk in per_cell for r in chunk]
    reports.sort(key=lambda r: (r.a, r.b, r.n))

    counts = {"total": 0, "holds": 0, "trivial": 0, "degenerate": 0, "violations": 0}
    lines = [_csv_header()] if args.csv else []
    for r in reports:
        counts["total"] += 1
        counts["holds"] += r.holds
        counts["trivial"] += r.trivial
        counts["degenerate"] += r.degenerate
        counts["violations"] += _is_violation(r)
        lines.append(_render(report_record(r, "theorem"), args.csv))
    summary = json.dumps({"kind": "summary", **counts})
    if args.csv:
        print(summary, file=sys.stderr)
    else:
        lines.append(summary)
    try:
        _emit(lines, args.out, args.csv)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if counts["violations"] == 0 else 1


def cmd_wn(args) -> int:
    print(primitive_part(_params(args), args.n).w)
    return 0


def cmd_rank(args) -> int:
    r = rank_of_apparition(_params(args), args.p)
    print("none" if r is None else r)
    return 0


def cmd_fib(args) -> int:
    report = verify_corollary_fib(args.p)
    lines = [_csv_header()] if args.csv else []
    lines.append(_render(report_record(report, "corollary"), args.csv))
    _emit(lines, None, args.csv)
    return 0 if report.holds else 1


def cmd_kw(args) -> int:
    report = verify_kimball_webb(_params(args), args.p)
    lines = [_csv_header()] if args.csv else []
    lines.append(_render(report_record(report, "kimball-webb"), args.csv))
    _emit(lines, None, args.csv)
    if not report.applicable:
        return 0
    return 0 if report.holds else 1


def cmd_wolstenholme(args) -> int:
    report = verify_wolstenholme(args.p)
    lines = [_csv_header()] if args.csv else []
    lines.append(_render(report_record(report, "wolstenholme"), args.csv))
    _emit(lines, None, args.csv)
    return 0 if report.holds else 1


def cmd_qcheck(args) -> int:
    try:
        g = q_certificate(args.n)
    except CongruenceFails as exc:
        print(f"nonzero remainder: {list(exc.remainder.coeffs)}", file=sys.stderr)
        return 1
    print(json.dumps([str(c) for c in g.coeffs]))
    return 0


def cmd_qscan(args) -> int:
    if args.n_max < 1:
        raise InvalidArgument("n-max must be >= 1")
    failures = 0
    for n in range(1, args.n_max + 1):
        try:
            g = q_certificate(n)
            rec = {"kind": "q", "n": str(n), "holds": True,
                   "g": [str(c) for c in g.coeffs]}
        except CongruenceFails as exc:
            failures += 1
            rec = {"kind": "q", "n": str(n), "holds": False,
                   "remainder": [str(c) for c in exc.remainder.coeffs]}
        print(json.dumps(rec))
    print(json.dumps({"kind": "summary", "total": args.n_max,
                      "failures": failures}))
    return 0 if failures == 0 else 1


# --- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucascong",
        description="Verify Wolstenholme-type congruences for Lucas sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ab(p):
        p.add_argument("--A", type=int, required=True, help="coefficient A (nonzero)")
        p.add_argument("--B", type=int, required=True, help="coefficient B (nonzero)")

    def add_csv(p):
        p.add_argument("--csv", action="store_true",
                       help="flat CSV output instead of JSON lines")

    p = sub.add_parser("verify", help="verify the congruence mod w_n^2")
    add_ab(p)
    p.add_argument("--n", type=int, required=True)
    add_csv(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="sweep a parameter box and report violations")
    p.add_argument("--a-min", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-min", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", type=str, default=None, help="write records to file")
    add_csv(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("wn", help="primitive part w_n of u_n")
    add_ab(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_wn)

    p = sub.add_parser("rank", help="rank of apparition of a prime")
    add_ab(p)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("fib", help="Fibonacci corollary mod p^2")
    p.add_argument("--p", type=int, required=True)
    add_csv(p)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("kw", help="Kimball-Webb congruence mod p^2")
    add_ab(p)
    p.add_argument("--p", type=int, required=True)
    add_csv(p)
    p.set_defaults(func=cmd_kw)

    p = sub.add_parser("wolstenholme", help="classical harmonic congruence mod p^2")
    p.add_argument("--p", type=int, required=True)
    add_csv(p)
    p.set_defaults(func=cmd_wolstenholme)

    p = sub.add_parser("qcheck", help="q-congruence certificate G(q) for one n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_qcheck)

    p = sub.add_parser("qscan", help="q-certificates for all n up to a bound")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_qscan)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidArgument, DegenerateSequence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
