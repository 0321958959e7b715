"""Two-variable linear Diophantine equations ``A*M1 + B*M2 = C``.

The particular solution comes from the extended Euclidean algorithm, the
general solution is the usual one-parameter family, and :func:`enumerate_box`
picks out the members whose ``M2`` lies in a window and whose ``M1`` is
bounded below. Interval endpoints are computed with exact floor/ceil integer
division.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union


class Bezout(NamedTuple):
    g: int
    x: int
    y: int


class LinearEquation(NamedTuple):
    A: int
    B: int
    C: int

    def holds(self, m1: int, m2: int) -> bool:
        return self.A * m1 + self.B * m2 == self.C


def extended_gcd(a: int, b: int) -> Bezout:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(|a|, |b|)``."""
    r0, r1 = abs(a), abs(b)
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        s0 = -s0
    if b < 0:
        t0 = -t0
    return Bezout(r0, s0, t0)


def floor_div(a: int, b: int) -> int:
    return a // b


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class NoSolution:
    __slots__ = ()

    def __repr__(self):
        return "NoSolution()"

    def __eq__(self, other):
        return isinstance(other, NoSolution)

    def __hash__(self):
        return hash(NoSolution)


class AllPairs:
    """``0*M1 + 0*M2 = 0``: every pair solves it."""

    __slots__ = ()

    def __repr__(self):
        return "AllPairs()"

    def __eq__(self, other):
        return isinstance(other, AllPairs)

    def __hash__(self):
        return hash(AllPairs)


@dataclass(frozen=True)
class DegenerateLine:
    """Exactly one coefficient vanished: ``pinned`` ('M1' or 'M2') equals ``value``, the other is free."""

    pinned: str
    value: int


@dataclass(frozen=True)
class GeneralSolution:
    """Solutions ``(m1_0 + b1*t, m2_0 - a1*t)`` for all integers ``t``."""

    m1_0: int
    m2_0: int
    a1: int
    b1: int
    c1: int

    def at(self, t: int) -> tuple[int, int]:
        return self.m1_0 + self.b1 * t, self.m2_0 - self.a1 * t


LinearSolution = Union[NoSolution, AllPairs, DegenerateLine, GeneralSolution]


def solve_linear(eq: LinearEquation) -> LinearSolution:
    A, B, C = eq
    if A == 0 and B == 0:
        return AllPairs() if C == 0 else NoSolution()
    if A == 0:
        return DegenerateLine("M2", C // B) if C % B == 0 else NoSolution()
    if B == 0:
        return DegenerateLine("M1", C // A) if C % A == 0 else NoSolution()
    g, x, y = extended_gcd(A, B)
    if C % g:
        return NoSolution()
    a1, b1, c1 = A // g, B // g, C // g
    # a1*x + b1*y == 1 after dividing the Bezout identity by g
    return GeneralSolution(m1_0=c1 * x, m2_0=c1 * y, a1=a1, b1=b1, c1=c1)


def t_interval(gs: GeneralSolution, m2_min: int, m2_max: int, m1_min: int) -> tuple[int, int]:
    """Inclusive ``(lo, hi)`` range of ``t``; empty when ``lo > hi``."""
    a1, b1 = gs.a1, gs.b1
    # m2_min <= m2_0 - a1*t <= m2_max  <=>  m2_0 - m2_max <= a1*t <= m2_0 - m2_min
    lo_num, hi_num = gs.m2_0 - m2_max, gs.m2_0 - m2_min
    if a1 > 0:
        lo, hi = ceil_div(lo_num, a1), floor_div(hi_num, a1)
    else:
        lo, hi = ceil_div(hi_num, a1), floor_div(lo_num, a1)
    # m1_0 + b1*t >= m1_min  <=>  b1*t >= m1_min - m1_0
    k = m1_min - gs.m1_0
    if b1 > 0:
        lo = max(lo, ceil_div(k, b1))
    else:
        hi = min(hi, floor_div(k, b1))
    return lo, hi


def enumerate_box(gs: GeneralSolution, m2_min: int, m2_max: int, m1_min: int) -> list[tuple[int, int]]:
    """All family members with ``m2_min <= M2 <= m2_max`` and ``M1 >= m1_min``, ascending in ``M1``."""
    if not isinstance(gs, GeneralSolution) or gs.a1 == 0 or gs.b1 == 0:
        raise ValueError("enumerate_box needs a non-degenerate GeneralSolution")
    if m2_min > m2_max:
        raise ValueError("empty M2 window")
    lo, hi = t_interval(gs, m2_min, m2_max, m1_min)
    pairs = [gs.at(t) for t in range(lo, hi + 1)]
    pairs.sort()
    return pairs
