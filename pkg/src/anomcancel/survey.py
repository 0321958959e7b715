"""Catalog generation: sweep denominators with the fast solver, render and export.

Work items ``(n, i1, i2)`` are independent. They are split into contiguous
denominator chunks, optionally run in worker processes, and merged and sorted
before anything is emitted, so output never depends on the schedule.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import __version__
from .digits import check_radix, digit_count, render
from .errors import DomainError, QueryError, WorkEstimateExceeded
from .oracle import DEFAULT_WORK_CAP, OracleScope, enumerate_all
from .records import NONTRIVIAL, CancellationRecord, RecordFilter, verify_cancellation
from .solver import CancellationQuery, InfiniteFamily, solve_fixed_denominator

JSONL_KEYS = (
    "base", "numerator", "denominator", "num_pos", "den_pos",
    "digit", "reduced_num", "reduced_den", "class",
)
CSV_COLUMNS = JSONL_KEYS + ("numerator_digits", "denominator_digits")


@dataclass(frozen=True)
class SweepPlan:
    radix: int
    den_min: int
    den_max: int
    num_pos_max: Optional[int] = None
    filter: RecordFilter = field(default_factory=RecordFilter)
    include_infinite: bool = False
    jobs: int = 1

    def __post_init__(self):
        check_radix(self.radix)
        if not 1 <= self.den_min <= self.den_max:
            raise DomainError(f"need 1 <= den_min <= den_max, got {self.den_min}..{self.den_max}")
        if self.num_pos_max is not None and self.num_pos_max < 0:
            raise DomainError("num_pos_max must be >= 0")
        if self.jobs < 1:
            raise DomainError("jobs must be >= 1")

    @property
    def i1_cap(self) -> int:
        if self.num_pos_max is not None:
            return self.num_pos_max
        return digit_count(self.den_max, self.radix) - 1

    def echo(self) -> dict:
        # jobs is left out on purpose: it must not change output bytes
        return {
            "den_min": self.den_min,
            "den_max": self.den_max,
            "num_pos_max": self.i1_cap,
            "filter": self.filter.describe(),
            "include_infinite": self.include_infinite,
        }


@dataclass
class Catalog:
    header: dict
    records: list = field(default_factory=list)
    families: list = field(default_factory=list)
    skipped: int = 0

    @property
    def base(self) -> int:
        return self.header.get("base")


def _sweep_chunk(args):
    b, lo, hi, i1_cap, flt, include_infinite = args
    records, families, skipped = [], [], 0
    for n in range(lo, hi + 1):
        for i2 in range(digit_count(n, b)):
            for i1 in range(i1_cap + 1):
                try:
                    q = CancellationQuery(b, n, i1, i2)
                except QueryError:
                    skipped += 1
                    continue
                sol = solve_fixed_denominator(q)
                if isinstance(sol, InfiniteFamily):
                    if include_infinite:
                        families.append(sol)
                else:
                    records.extend(r for r in sol.records if flt.admits(r))
    return records, families, skipped


def _chunks(lo, hi, parts):
    step = max(1, -(-(hi - lo + 1) // parts))
    return [(a, min(a + step - 1, hi)) for a in range(lo, hi + 1, step)]


def sweep(plan: SweepPlan) -> Catalog:
    parts = plan.jobs * 4 if plan.jobs > 1 else 1
    tasks = [
        (plan.radix, a, z, plan.i1_cap, plan.filter, plan.include_infinite)
        for a, z in _chunks(plan.den_min, plan.den_max, parts)
    ]
    if plan.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=plan.jobs) as ex:
            results = list(ex.map(_sweep_chunk, tasks))
    else:
        results = [_sweep_chunk(t) for t in tasks]
    cat = Catalog(header={"base": plan.radix, "plan": plan.echo(), "version": __version__})
    seen = set()
    for recs, fams, skipped in results:
        for r in recs:
            key = (r.numerator, r.denominator, r.num_pos, r.den_pos)
            if key not in seen:
                seen.add(key)
                cat.records.append(r)
        cat.families.extend(fams)
        cat.skipped += skipped
    cat.records.sort(key=CancellationRecord.sort_key)
    cat.families.sort(key=InfiniteFamily.sort_key)
    return cat


def boas_table(b_min: int, b_max: int, d: int, work_cap: int = DEFAULT_WORK_CAP, jobs: int = 1) -> dict:
    """Proper nontrivial d-digit over d-digit cancellations for each base, keyed by base."""
    check_radix(b_min)
    if b_min > b_max:
        raise DomainError("b_min must not exceed b_max")
    if d < 2:
        raise DomainError("table digit count must be >= 2")
    est = sum((b**d - b ** (d - 1)) * d * d for b in range(b_min, b_max + 1))
    if est > work_cap:
        raise WorkEstimateExceeded(est, work_cap)
    flt = RecordFilter(proper_only=True, classes=frozenset({NONTRIVIAL}))
    tables = {}
    for b in range(b_min, b_max + 1):
        plan = SweepPlan(b, b ** (d - 1), b**d - 1, num_pos_max=d - 1, filter=flt, jobs=jobs)
        cat = sweep(plan)
        cat.records = [r for r in cat.records if digit_count(r.numerator, b) == d]
        cat.header["plan"]["table_digits"] = d
        tables[b] = cat
    return tables


# ---------------------------------------------------------------- export


def record_line(rec: CancellationRecord) -> str:
    return json.dumps(rec.as_dict(), separators=(",", ":"))


def family_line(fam: InfiniteFamily) -> str:
    return json.dumps(fam.as_dict(), separators=(",", ":"))


def to_jsonl(records: Iterable[CancellationRecord], families: Iterable[InfiniteFamily] = ()) -> str:
    lines = [record_line(r) for r in records] + [family_line(f) for f in families]
    return "".join(line + "\n" for line in lines)


def to_csv(records: Iterable[CancellationRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        d = r.as_dict()
        w.writerow([d[k] for k in JSONL_KEYS] + [render(r.numerator, r.base), render(r.denominator, r.base)])
    return buf.getvalue()


def to_text(cat: Catalog) -> str:
    b = cat.base
    rows = [
        (
            render(r.numerator, b),
            render(r.denominator, b),
            f"{render(r.reduced_num, b)}/{render(r.reduced_den, b)}",
            f"({r.num_pos},{r.den_pos})",
            r.kind,
        )
        for r in cat.records
    ]
    head = ("numerator", "denominator", "reduced", "positions", "class")
    widths = [max([len(h)] + [len(row[k]) for row in rows]) for k, h in enumerate(head)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths[:-1]) + "  {}"
    out = [f"BASE {b}", fmt.format(*head)]
    out += [fmt.format(*row) for row in rows]
    for f in cat.families:
        out.append(
            f"family: {render(f.denominator, b)} at ({f.num_pos},{f.den_pos}) "
            f"numerators k*{render(f.stride, b)}, k >= 1"
        )
    return "\n".join(out) + "\n"


def export(cat: Catalog, fmt: str, sink=None) -> str:
    """Render ``cat`` as ``jsonl``, ``csv`` or ``text``; also write it to ``sink`` if given."""
    if fmt == "jsonl":
        data = to_jsonl(cat.records, cat.families)
    elif fmt == "csv":
        data = to_csv(cat.records)
    elif fmt == "text":
        data = to_text(cat)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if sink is not None:
        sink.write(data)
    return data


def parse_jsonl(lines: Iterable[str]) -> Catalog:
    records, families = [], []
    base = None
    for line in lines:
        line = line.strip()
        if not line:
            continue
        d = json.loads(line)
        base = d["base"]
        if d.get("type") == "infinite_family":
            families.append(InfiniteFamily.from_dict(d))
        else:
            records.append(CancellationRecord.from_dict(d))
    return Catalog(header={"base": base}, records=records, families=families)


def parse_csv(text: str) -> list:
    rows = csv.DictReader(io.StringIO(text))
    out = []
    for row in rows:
        d = {k: (row[k] if k == "class" else int(row[k])) for k in JSONL_KEYS}
        out.append(CancellationRecord.from_dict(d))
    return out


# ---------------------------------------------------------------- selftest


@dataclass
class SelftestReport:
    scopes_checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _capped_solver_set(b, d1, d2, jobs):
    plan = SweepPlan(b, b ** (d2 - 1), b**d2 - 1, num_pos_max=d1 - 1, include_infinite=True, jobs=jobs)
    cat = sweep(plan)
    lo, hi = b ** (d1 - 1), b**d1 - 1
    found = {}
    for r in cat.records:
        if lo <= r.numerator <= hi:
            found[(r.numerator, r.denominator, r.num_pos, r.den_pos)] = r.kind
    for f in cat.families:
        for k in range(max(1, -(-lo // f.stride)), hi // f.stride + 1):
            v = verify_cancellation(b, f.member(k), f.denominator, f.num_pos, f.den_pos)
            if v.valid:
                found[(f.member(k), f.denominator, f.num_pos, f.den_pos)] = v.record.kind
            else:
                found[(f.member(k), f.denominator, f.num_pos, f.den_pos)] = "INVALID:" + v.reason
    return found


def selftest(b_max: int, den_digit_max: int, jobs: int = 1, b_min: int = 2) -> SelftestReport:
    """Compare the solver sweep against the exhaustive oracle on every small scope."""
    report = SelftestReport()
    for b in range(b_min, b_max + 1):
        for d2 in range(2, den_digit_max + 1):
            for d1 in range(1, den_digit_max + 1):
                oracle = {
                    (r.numerator, r.denominator, r.num_pos, r.den_pos): r.kind
                    for r in enumerate_all(OracleScope(b, d1, d2), jobs=jobs)
                }
                solver = _capped_solver_set(b, d1, d2, jobs)
                report.scopes_checked += 1
                for key in sorted(set(oracle) | set(solver)):
                    if oracle.get(key) != solver.get(key):
                        m, n, i1, i2 = key
                        report.mismatches.append({
                            "base": b, "num_digits": d1, "den_digits": d2,
                            "numerator": m, "denominator": n, "num_pos": i1, "den_pos": i2,
                            "oracle": oracle.get(key), "solver": solver.get(key),
                        })
    return report
