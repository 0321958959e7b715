"""Command-line front end: ``anomcancel {solve,check,oracle,sweep,table,selftest}``.

Exit codes: 0 success (empty results included), 2 invalid arguments or query,
3 internal verification failure or selftest mismatch, 4 work-estimate refusal.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .digits import render
from .errors import DomainError, QueryError, VerificationError, WorkEstimateExceeded
from .oracle import OracleScope, enumerate_all
from .records import RecordFilter, verify_cancellation
from .solver import CancellationQuery, InfiniteFamily, solve_fixed_denominator
from .survey import Catalog, SweepPlan, boas_table, export, selftest, sweep

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_REFUSED = 0, 2, 3, 4
FORMATS = ("jsonl", "csv", "text")


def _default_jobs() -> int:
    raw = os.environ.get("AC_JOBS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="anomcancel", description="Anomalous cancellation finder.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="all numerators for a fixed denominator and positions")
    s.add_argument("--base", type=int, required=True)
    s.add_argument("--den", type=int, required=True)
    s.add_argument("--num-pos", type=int, required=True)
    s.add_argument("--den-pos", type=int, required=True)
    s.add_argument("--include-trivial", action="store_true")
    s.add_argument("--format", choices=FORMATS, default="text")

    c = sub.add_parser("check", help="verify a single cancellation")
    c.add_argument("--base", type=int, required=True)
    c.add_argument("--num", type=int, required=True)
    c.add_argument("--den", type=int, required=True)
    c.add_argument("--num-pos", type=int, required=True)
    c.add_argument("--den-pos", type=int, required=True)

    o = sub.add_parser("oracle", help="exhaustive scan of d1-digit over d2-digit fractions")
    o.add_argument("--base", type=int, required=True)
    o.add_argument("--num-digits", type=int, required=True)
    o.add_argument("--den-digits", type=int, required=True)
    o.add_argument("--proper-only", action="store_true")
    o.add_argument("--nontrivial-only", action="store_true")
    o.add_argument("--jobs", type=int, default=None)
    o.add_argument("--format", choices=FORMATS, default="jsonl")

    w = sub.add_parser("sweep", help="catalog every cancellation over a denominator range")
    w.add_argument("--base", type=int, required=True)
    w.add_argument("--den-min", type=int, required=True)
    w.add_argument("--den-max", type=int, required=True)
    w.add_argument("--num-pos-max", type=int, default=None)
    w.add_argument("--proper-only", action="store_true")
    w.add_argument("--nontrivial-only", action="store_true")
    w.add_argument("--include-infinite", action="store_true")
    w.add_argument("--jobs", type=int, default=None)
    w.add_argument("--format", choices=FORMATS, default="jsonl")
    w.add_argument("--out", default=None)

    t = sub.add_parser("table", help="Boas-style tables of proper nontrivial cases")
    t.add_argument("--base-min", type=int, required=True)
    t.add_argument("--base-max", type=int, required=True)
    t.add_argument("--digits", type=int, required=True)
    t.add_argument("--format", choices=FORMATS, default="text")

    st = sub.add_parser("selftest", help="cross-check solver against the oracle")
    st.add_argument("--base-max", type=int, required=True)
    st.add_argument("--den-digits", type=int, required=True)
    st.add_argument("--jobs", type=int, default=None)
    return p


def _jobs(args) -> int:
    return args.jobs if args.jobs is not None else _default_jobs()


def _cmd_solve(args, out):
    q = CancellationQuery(args.base, args.den, args.num_pos, args.den_pos)
    sol = solve_fixed_denominator(q)
    flt = RecordFilter() if args.include_trivial else RecordFilter(classes=frozenset({"nontrivial"}))
    cat = Catalog(header={"base": args.base})
    if isinstance(sol, InfiniteFamily):
        if args.include_trivial:
            cat.families.append(sol)
    else:
        cat.records = [r for r in sol.records if flt.admits(r)]
    export(cat, args.format, out)
    return EXIT_OK


def _cmd_check(args, out):
    v = verify_cancellation(args.base, args.num, args.den, args.num_pos, args.den_pos)
    if not v.valid:
        out.write(f"invalid: {v.reason}\n")
        return EXIT_OK
    r = v.record
    b = args.base
    out.write(
        f"valid: {r.kind} {render(r.numerator, b)}/{render(r.denominator, b)}"
        f" -> {render(r.reduced_num, b)}/{render(r.reduced_den, b)} (base {b})\n"
    )
    return EXIT_OK


def _cmd_oracle(args, out):
    flt = RecordFilter.make(args.proper_only, args.nontrivial_only)
    scope = OracleScope(args.base, args.num_digits, args.den_digits, flt)
    recs = enumerate_all(scope, jobs=_jobs(args))
    export(Catalog(header={"base": args.base}, records=recs), args.format, out)
    return EXIT_OK


def _cmd_sweep(args, out):
    plan = SweepPlan(
        radix=args.base,
        den_min=args.den_min,
        den_max=args.den_max,
        num_pos_max=args.num_pos_max,
        filter=RecordFilter.make(args.proper_only, args.nontrivial_only),
        include_infinite=args.include_infinite,
        jobs=_jobs(args),
    )
    cat = sweep(plan)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            export(cat, args.format, fh)
    else:
        export(cat, args.format, out)
    return EXIT_OK


def _cmd_table(args, out):
    for _, cat in sorted(boas_table(args.base_min, args.base_max, args.digits).items()):
        export(cat, args.format, out)
    return EXIT_OK


def _cmd_selftest(args, out):
    report = selftest(args.base_max, args.den_digits, jobs=_jobs(args))
    for mm in report.mismatches:
        out.write("mismatch " + json.dumps(mm, separators=(",", ":")) + "\n")
    out.write(f"scopes checked: {report.scopes_checked}\nmismatches: {len(report.mismatches)}\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


COMMANDS = {
    "solve": _cmd_solve,
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "sweep": _cmd_sweep,
    "table": _cmd_table,
    "selftest": _cmd_selftest,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (QueryError, DomainError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except VerificationError as exc:
        err.write(f"internal verification failure: {exc}\n")
        return EXIT_VERIFY
    except WorkEstimateExceeded as exc:
        err.write(f"refused: {exc}\n")
        return EXIT_REFUSED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
