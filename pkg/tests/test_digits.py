import pytest
from hypothesis import given, strategies as st

from anomcancel.digits import (
    decompose, digit_at, digit_count, insert_digit, remove_digit, render, to_digits,
)
from anomcancel.errors import DomainError, PositionError

bases = st.integers(2, 40)
positive = st.integers(1, 10**60)


@pytest.mark.parametrize("n,b,d", [(64, 10, 2), (1, 2, 1), (9999, 10, 4), (10000, 10, 5), (255, 16, 2), (256, 16, 3)])
def test_digit_count(n, b, d):
    assert digit_count(n, b) == d


@pytest.mark.parametrize("n", [0, -5])
def test_digit_count_rejects_nonpositive(n):
    with pytest.raises(DomainError):
        digit_count(n, 10)


def test_bad_radix():
    with pytest.raises(DomainError):
        digit_count(5, 1)


@pytest.mark.parametrize("n,i,c", [(64, 1, 6), (64, 0, 4), (6664, 3, 6)])
def test_digit_at(n, i, c):
    assert digit_at(n, 10, i) == c


@pytest.mark.parametrize("n,i,out", [(64, 1, 4), (105, 2, 5), (6, 0, 0), (64, 0, 6)])
def test_remove_digit(n, i, out):
    assert remove_digit(n, 10, i) == out


@pytest.mark.parametrize("fn", [digit_at, remove_digit, decompose])
def test_position_beyond_leading_digit(fn):
    with pytest.raises(PositionError):
        fn(64, 10, 2)
    with pytest.raises(PositionError):
        fn(64, 10, -1)


@pytest.mark.parametrize("n,i,parts", [(64, 1, (0, 6, 4)), (365, 1, (3, 6, 5)), (6664, 3, (0, 6, 664))])
def test_decompose(n, i, parts):
    dec = decompose(n, 10, i)
    assert (dec.high, dec.digit, dec.low) == parts
    assert dec.reconstruct() == n


def test_render():
    assert render(255, 16) == "FF"
    assert render(5, 2) == "101"
    assert render(37 * 40 + 3, 40) == "37.3"


@given(positive, bases)
def test_digit_count_bounds(n, b):
    d = digit_count(n, b)
    assert b ** (d - 1) <= n < b**d
    assert len(to_digits(n, b)) == d


@given(positive, bases, st.data())
def test_decompose_round_trip_and_agreement(n, b, data):
    ds = to_digits(n, b)
    i = data.draw(st.integers(0, len(ds) - 1))
    dec = decompose(n, b, i)
    assert dec.reconstruct() == n
    assert 0 <= dec.digit < b and 0 <= dec.low < b**i
    assert dec.digit == digit_at(n, b, i) == ds[i]
    assert remove_digit(n, b, i) == sum(d * b**k for k, d in enumerate(ds[:i] + ds[i + 1:]))
    # only the leading digit may leave an empty high part
    assert dec.high > 0 or i == len(ds) - 1


@given(st.integers(0, 10**30), bases, st.integers(0, 25), st.data())
def test_remove_insert_consistency(x, b, i, data):
    c = data.draw(st.integers(0, b - 1))
    n = insert_digit(x, b, i, c)
    if n >= 1 and i < digit_count(n, b):
        assert remove_digit(n, b, i) == x
