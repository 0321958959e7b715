"""Fixed-denominator search for anomalous cancellations.

For a denominator ``n`` with digit ``c`` at position ``i2`` and a numerator of
the shape ``m = M1*b**(i1+1) + c*b**i1 + M2`` (``0 <= M2 < b**i1``), equality
of ``m/n`` and ``m'/n'`` cross-multiplies to a linear equation in ``M1, M2``.
Its solutions inside the ``M2`` window are exactly the numerators sought, of
any length.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import diophantine as dio
from .digits import check_radix, decompose
from .errors import DomainError, PositionError, QueryError, VerificationError
from .records import (
    TRIVIAL_ZERO,
    CancellationRecord,
    classify,
    verify_cancellation,
)

__all__ = [
    "CancellationQuery",
    "Finite",
    "InfiniteFamily",
    "build_equation",
    "solve_fixed_denominator",
    "verify_cancellation",
    "classify",
]


@dataclass(frozen=True)
class CancellationQuery:
    radix: int
    denominator: int
    num_pos: int
    den_pos: int

    def __post_init__(self):
        try:
            check_radix(self.radix)
        except DomainError as exc:
            raise QueryError(str(exc)) from None
        if self.denominator < 1:
            raise QueryError(f"denominator must be positive, got {self.denominator}")
        if self.num_pos < 0:
            raise QueryError(f"numerator position must be >= 0, got {self.num_pos}")
        try:
            dec = decompose(self.denominator, self.radix, self.den_pos)
        except PositionError as exc:
            raise QueryError(str(exc)) from None
        if dec.high * self.radix**self.den_pos + dec.low < 1:
            raise QueryError(
                f"removing digit {self.den_pos} of {self.denominator} leaves a zero denominator"
            )


@dataclass(frozen=True)
class Finite:
    records: tuple

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    @property
    def numerators(self) -> list[int]:
        return [r.numerator for r in self.records]


@dataclass(frozen=True)
class InfiniteFamily:
    """Every ``m = k*stride`` (``k >= 1``) works; arises when ``c == 0`` and ``N2 == 0``."""

    base: int
    denominator: int
    num_pos: int
    den_pos: int
    digit: int
    stride: int
    reason: str = "zero digit with zero low part: cancellation is a division by the base"

    @property
    def first(self) -> int:
        return self.stride

    def member(self, k: int) -> int:
        return k * self.stride

    def sort_key(self):
        return (self.denominator, self.den_pos, self.num_pos)

    def as_dict(self) -> dict:
        return {
            "type": "infinite_family",
            "base": self.base,
            "denominator": self.denominator,
            "num_pos": self.num_pos,
            "den_pos": self.den_pos,
            "digit": self.digit,
            "stride": self.stride,
            "first": self.first,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InfiniteFamily":
        return cls(d["base"], d["denominator"], d["num_pos"], d["den_pos"], d["digit"], d["stride"])

    @property
    def kind(self) -> str:
        return TRIVIAL_ZERO


SolutionSet = Union[Finite, InfiniteFamily]


def _reduced_den(q: CancellationQuery):
    dec = decompose(q.denominator, q.radix, q.den_pos)
    return dec.digit, dec.high * q.radix**q.den_pos + dec.low


def build_equation(q: CancellationQuery) -> dio.LinearEquation:
    """Coefficients of ``A*M1 + B*M2 = C`` for the query."""
    b, n = q.radix, q.denominator
    c, n_red = _reduced_den(q)
    p = b**q.num_pos
    return dio.LinearEquation(A=p * (b * n_red - n), B=n_red - n, C=-c * p * n_red)


def solve_fixed_denominator(q: CancellationQuery) -> SolutionSet:
    b, n, i1, i2 = q.radix, q.denominator, q.num_pos, q.den_pos
    c, n_red = _reduced_den(q)
    p = b**i1
    eq = build_equation(q)
    sol = dio.solve_linear(eq)

    if isinstance(sol, dio.DegenerateLine):
        # B < 0 always, so only A can vanish; that forces c == 0 and C == 0, pinning M2 = 0
        if sol.pinned != "M2" or sol.value != 0 or c != 0:
            raise VerificationError(f"unexpected degenerate equation {eq} for {q}")
        fam = InfiniteFamily(b, n, i1, i2, c, p * b)
        for k in (1, 2, 3):
            if not verify_cancellation(b, fam.member(k), n, i1, i2).valid:
                raise VerificationError(f"family member {fam.member(k)} failed for {q}")
        return fam
    if isinstance(sol, dio.NoSolution):
        return Finite(())
    if not isinstance(sol, dio.GeneralSolution):
        raise VerificationError(f"unexpected solution shape {sol!r} for {q}")

    records = []
    for m1, m2 in dio.enumerate_box(sol, 0, p - 1, 0):
        if m1 == 0 and c == 0:
            continue
        m = m1 * p * b + c * p + m2
        m_red = m1 * p + m2
        if m_red < 1:
            continue
        if m * n_red != m_red * n:
            raise VerificationError(f"constructed numerator {m} fails cross-multiplication for {q}")
        records.append(CancellationRecord(b, m, n, i1, i2, c, m_red, n_red, classify(m, n, c)))
    return Finite(tuple(records))


def solve(b: int, n: int, i1: int, i2: int) -> SolutionSet:
    return solve_fixed_denominator(CancellationQuery(b, n, i1, i2))

