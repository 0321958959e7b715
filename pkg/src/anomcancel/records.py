"""Cancellation records, their classification and the exact verdict check.

Nothing here touches the Diophantine machinery: a verdict is digit extraction
plus one cross-multiplication, which is what lets the oracle stay independent
of the solver.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .digits import check_radix, digit_count

NONTRIVIAL = "nontrivial"
TRIVIAL_EQUAL = "trivial_equal"
TRIVIAL_ZERO = "trivial_zero"
CLASSES = (NONTRIVIAL, TRIVIAL_EQUAL, TRIVIAL_ZERO)


def classify(m: int, n: int, c: int) -> str:
    if m == n:
        return TRIVIAL_EQUAL
    if c == 0:
        return TRIVIAL_ZERO
    return NONTRIVIAL


@dataclass(frozen=True)
class CancellationRecord:
    base: int
    numerator: int
    denominator: int
    num_pos: int
    den_pos: int
    digit: int
    reduced_num: int
    reduced_den: int
    kind: str

    def sort_key(self):
        return (self.denominator, self.numerator, self.den_pos, self.num_pos)

    @property
    def proper(self) -> bool:
        return self.numerator < self.denominator

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "num_pos": self.num_pos,
            "den_pos": self.den_pos,
            "digit": self.digit,
            "reduced_num": self.reduced_num,
            "reduced_den": self.reduced_den,
            "class": self.kind,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CancellationRecord":
        return cls(
            base=d["base"],
            numerator=d["numerator"],
            denominator=d["denominator"],
            num_pos=d["num_pos"],
            den_pos=d["den_pos"],
            digit=d["digit"],
            reduced_num=d["reduced_num"],
            reduced_den=d["reduced_den"],
            kind=d["class"],
        )


@dataclass(frozen=True)
class RecordFilter:
    proper_only: bool = False
    classes: frozenset = field(default_factory=lambda: frozenset(CLASSES))

    def admits(self, rec: CancellationRecord) -> bool:
        if self.proper_only and not rec.proper:
            return False
        return rec.kind in self.classes

    @classmethod
    def make(cls, proper_only=False, nontrivial_only=False):
        classes = frozenset({NONTRIVIAL}) if nontrivial_only else frozenset(CLASSES)
        return cls(proper_only=proper_only, classes=classes)

    def describe(self) -> dict:
        return {"proper_only": self.proper_only, "classes": sorted(self.classes)}


class Verdict(NamedTuple):
    valid: bool
    record: Optional[CancellationRecord] = None
    reason: str = ""


def verify_cancellation(b: int, m: int, n: int, i1: int, i2: int) -> Verdict:
    """Decide whether deleting digit ``i1`` of ``m`` and digit ``i2`` of ``n`` keeps ``m/n``."""
    check_radix(b)
    if m < 1 or n < 1:
        return Verdict(False, reason="nonpositive operand")
    if i1 < 0 or i2 < 0:
        return Verdict(False, reason="negative position")
    if i1 >= digit_count(m, b):
        return Verdict(False, reason="numerator position out of range")
    if i2 >= digit_count(n, b):
        return Verdict(False, reason="denominator position out of range")
    p1, p2 = b**i1, b**i2
    hi1, lo1 = divmod(m, p1)
    hi2, lo2 = divmod(n, p2)
    hi1, c1 = divmod(hi1, b)
    hi2, c2 = divmod(hi2, b)
    if c1 != c2:
        return Verdict(False, reason="digit mismatch")
    m_red = hi1 * p1 + lo1
    n_red = hi2 * p2 + lo2
    if n_red < 1:
        return Verdict(False, reason="reduced denominator is zero")
    if m_red < 1:
        return Verdict(False, reason="reduced numerator is zero")
    if m * n_red != m_red * n:
        return Verdict(False, reason="ratio changed")
    rec = CancellationRecord(b, m, n, i1, i2, c1, m_red, n_red, classify(m, n, c1))
    return Verdict(True, rec)
