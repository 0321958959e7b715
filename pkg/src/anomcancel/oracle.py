"""Exhaustive baseline: test every d1-digit over d2-digit fraction at every position pair.

Deliberately dumb and deliberately independent of :mod:`diophantine` and
:mod:`solver`; it only extracts digits and cross-multiplies.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernel
from .digits import check_radix
from .errors import DomainError, VerificationError, WorkEstimateExceeded
from .records import RecordFilter, verify_cancellation

DEFAULT_WORK_CAP = 10**8


@dataclass(frozen=True)
class OracleScope:
    radix: int
    num_digits: int
    den_digits: int
    filter: RecordFilter = field(default_factory=RecordFilter)

    def __post_init__(self):
        check_radix(self.radix)
        if self.num_digits < 1 or self.den_digits < 1:
            raise DomainError("digit counts must be >= 1")

    @property
    def numerator_range(self) -> tuple[int, int]:
        return self.radix ** (self.num_digits - 1), self.radix**self.num_digits

    def pair_count(self) -> int:
        b = self.radix
        return (b**self.num_digits - b ** (self.num_digits - 1)) * (
            b**self.den_digits - b ** (self.den_digits - 1)
        )

    def work_estimate(self) -> int:
        return self.pair_count() * self.num_digits * self.den_digits


def _chunks(lo, hi, parts):
    step = max(1, -(-(hi - lo) // parts))
    return [(a, min(a + step, hi)) for a in range(lo, hi, step)]


def _scan_chunk(args):
    return kernel.scan(*args)


def scan_raw(scope: OracleScope, jobs: int = 1, force=None):
    """Return ``(hits, pairs_examined)`` over the whole scope."""
    b, d1, d2 = scope.radix, scope.num_digits, scope.den_digits
    lo, hi = scope.numerator_range
    tasks = [(b, d1, d2, a, z, force) for a, z in _chunks(lo, hi, max(1, jobs) * 4)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_scan_chunk, tasks))
    else:
        results = [_scan_chunk(t) for t in tasks]
    hits, pairs = [], 0
    for h, p in results:
        hits.extend(h)
        pairs += p
    return hits, pairs


def enumerate_all(scope: OracleScope, jobs: int = 1, work_cap: int = DEFAULT_WORK_CAP, force=None):
    """Sorted records (by denominator, numerator, den_pos, num_pos) the filter admits."""
    est = scope.work_estimate()
    if est > work_cap:
        raise WorkEstimateExceeded(est, work_cap)
    hits, pairs = scan_raw(scope, jobs=jobs, force=force)
    if pairs != scope.pair_count():
        raise VerificationError(f"examined {pairs} pairs, expected {scope.pair_count()}")
    out = []
    for m, n, i1, i2 in hits:
        verdict = verify_cancellation(scope.radix, m, n, i1, i2)
        if not verdict.valid:
            raise VerificationError(f"kernel hit {m}/{n} at ({i1},{i2}) failed: {verdict.reason}")
        if scope.filter.admits(verdict.record):
            out.append(verdict.record)
    out.sort(key=lambda r: r.sort_key())
    return out
