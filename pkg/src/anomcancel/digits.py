"""Exact radix-b digit arithmetic.

Positions are 0-indexed from the least-significant digit. Every function works
on Python ints, so there is no size limit and nothing is ever rounded.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, PositionError

GLYPHS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def check_radix(b: int) -> int:
    if not isinstance(b, int) or b < 2:
        raise DomainError(f"radix must be an integer >= 2, got {b!r}")
    return b


def digit_count(n: int, b: int) -> int:
    """Return the unique d with b**(d-1) <= n < b**d."""
    check_radix(b)
    if n <= 0:
        raise DomainError(f"digit_count needs n >= 1, got {n}")
    d, power = 1, b
    while power <= n:
        power *= b
        d += 1
    return d


def _check_position(n: int, b: int, i: int) -> None:
    if i < 0:
        raise PositionError(f"digit position must be >= 0, got {i}")
    d = digit_count(n, b)
    if i >= d:
        raise PositionError(f"position {i} does not exist in a {d}-digit numeral")


def digit_at(n: int, b: int, i: int) -> int:
    _check_position(n, b, i)
    return (n // b**i) % b


def remove_digit(n: int, b: int, i: int) -> int:
    """Delete the digit at position ``i``; the result may be 0 or shorter than expected."""
    _check_position(n, b, i)
    p = b**i
    return (n // (p * b)) * p + n % p


def insert_digit(x: int, b: int, i: int, c: int) -> int:
    """Inverse of :func:`remove_digit`: put digit ``c`` at position ``i`` of ``x``."""
    if not 0 <= c < b:
        raise DomainError(f"digit {c} out of range for base {b}")
    p = b**i
    high, low = divmod(x, p)
    return high * p * b + c * p + low


@dataclass(frozen=True)
class Decomposition:
    """``n == high * b**(i+1) + digit * b**i + low`` around position ``i``."""

    high: int
    digit: int
    low: int
    position: int
    radix: int

    def reconstruct(self) -> int:
        p = self.radix**self.position
        return self.high * p * self.radix + self.digit * p + self.low


def decompose(n: int, b: int, i: int) -> Decomposition:
    _check_position(n, b, i)
    p = b**i
    rest, low = divmod(n, p)
    high, digit = divmod(rest, b)
    return Decomposition(high=high, digit=digit, low=low, position=i, radix=b)


def to_digits(n: int, b: int) -> list[int]:
    """Digits of ``n`` least-significant first. ``to_digits(0, b) == [0]``."""
    check_radix(b)
    if n < 0:
        raise DomainError("negative numbers have no digit expansion here")
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, b)
        out.append(r)
    return out


def render(n: int, b: int) -> str:
    """Base-b numeral: 0-9 then A-Z up to base 36, dot-separated decimal digits above."""
    ds = to_digits(n, b)[::-1]
    if b <= len(GLYPHS):
        return "".join(GLYPHS[d] for d in ds)
    return ".".join(str(d) for d in ds)
