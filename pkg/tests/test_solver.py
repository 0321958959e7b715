import pytest
import sympy
from hypothesis import given, settings, strategies as st

from anomcancel.digits import digit_at, digit_count, remove_digit
from anomcancel.diophantine import LinearEquation
from anomcancel.errors import QueryError
from anomcancel.records import classify, verify_cancellation
from anomcancel.solver import (
    CancellationQuery, Finite, InfiniteFamily, build_equation, solve,
)


def _symbolic_equation(b, n, i1, i2):
    # expand m*n' - m'*n = 0 with M1, M2 symbolic; A*M1 + B*M2 = C
    M1, M2 = sympy.symbols("M1 M2")
    c, n_red = digit_at(n, b, i2), remove_digit(n, b, i2)
    m = M1 * b ** (i1 + 1) + c * b**i1 + M2
    m_red = M1 * b**i1 + M2
    poly = sympy.Poly(sympy.expand(m * n_red - m_red * n), M1, M2)
    A = poly.coeff_monomial(M1)
    B = poly.coeff_monomial(M2)
    C = -poly.coeff_monomial(1)
    return LinearEquation(int(A), int(B), int(C))


@pytest.mark.parametrize("q,expected", [
    ((10, 64, 0, 1), (-24, -60, -24)),
    ((10, 95, 0, 1), (-45, -90, -45)),
    ((10, 20, 0, 0), (0, -18, 0)),
])
def test_build_equation_examples(q, expected):
    assert tuple(build_equation(CancellationQuery(*q))) == expected
    assert tuple(_symbolic_equation(*q)) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 16), st.integers(2, 10**6), st.integers(0, 5), st.data())
def test_build_equation_matches_symbolic_expansion(b, n, i1, data):
    i2 = data.draw(st.integers(0, digit_count(n, b) - 1))
    if remove_digit(n, b, i2) < 1:
        return
    eq = build_equation(CancellationQuery(b, n, i1, i2))
    assert eq == _symbolic_equation(b, n, i1, i2)
    assert eq.B < 0


@pytest.mark.parametrize("q", [(10, 6, 0, 0), (10, 64, 0, 2), (1, 64, 0, 0), (10, 0, 0, 0), (10, 64, -1, 0), (10, 100, 0, 2)])
def test_invalid_queries(q):
    with pytest.raises(QueryError):
        CancellationQuery(*q)


def test_motivating_example():
    sol = solve(10, 64, 0, 1)
    assert isinstance(sol, Finite)
    assert sol.numerators == [16]
    rec = sol.records[0]
    assert (rec.reduced_num, rec.reduced_den, rec.digit, rec.kind) == (1, 4, 6, "nontrivial")


def test_zero_family():
    sol = solve(10, 20, 0, 0)
    assert isinstance(sol, InfiniteFamily)
    assert sol.stride == 10 and sol.first == 10
    assert [sol.member(k) for k in (1, 2, 3)] == [10, 20, 30]
    assert solve(10, 20, 1, 0).stride == 100


def test_eleven():
    sol = solve(10, 11, 0, 0)
    assert sol.numerators == [11]
    assert sol.records[0].kind == "trivial_equal"


def test_longer_numerators():
    sol = solve(10, 6664, 2, 3)
    assert 1666 in sol.numerators
    assert 1666 * 664 == 166 * 6664 == 1106224
    assert sol.numerators == sorted(set(sol.numerators))


def test_verify_examples():
    v = verify_cancellation(10, 16, 64, 0, 1)
    assert v.valid and v.record.kind == "nontrivial"
    v = verify_cancellation(10, 17, 64, 0, 1)
    assert not v.valid and v.reason == "digit mismatch"
    v = verify_cancellation(10, 64, 64, 0, 0)
    assert v.valid and v.record.kind == "trivial_equal"
    assert verify_cancellation(10, 16, 64, 2, 1).reason == "numerator position out of range"
    assert not verify_cancellation(10, 6, 6, 0, 0).valid


@pytest.mark.parametrize("m,n,c,kind", [(16, 64, 6, "nontrivial"), (64, 64, 4, "trivial_equal"), (30, 20, 0, "trivial_zero")])
def test_classify(m, n, c, kind):
    assert classify(m, n, c) == kind


def _brute_numerators(b, n, i1, i2, m_max):
    return sorted(
        m for m in range(1, m_max)
        if verify_cancellation(b, m, n, i1, i2).valid
    )


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 10), st.integers(2, 400), st.integers(0, 2), st.data())
def test_solver_matches_brute_force(b, n, i1, data):
    i2 = data.draw(st.integers(0, digit_count(n, b) - 1))
    if remove_digit(n, b, i2) < 1:
        return
    sol = solve(b, n, i1, i2)
    m_max = b ** (i1 + 3)
    brute = _brute_numerators(b, n, i1, i2, m_max)
    if isinstance(sol, InfiniteFamily):
        assert brute == list(range(sol.stride, m_max, sol.stride))
    else:
        assert [m for m in sol.numerators if m < m_max] == brute
        for r in sol.records:
            assert verify_cancellation(b, r.numerator, n, i1, i2).record == r


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 36), st.integers(1, 10**12), st.data())
def test_degeneracy_iff_divisible(b, n, data):
    i2 = data.draw(st.integers(0, digit_count(n, b) - 1))
    i1 = data.draw(st.integers(0, 4))
    if remove_digit(n, b, i2) < 1:
        return
    sol = solve(b, n, i1, i2)
    assert isinstance(sol, InfiniteFamily) == (n % b ** (i2 + 1) == 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 36), st.integers(10**20, 10**40), st.data())
def test_soundness_big(b, n, data):
    i2 = data.draw(st.integers(0, digit_count(n, b) - 1))
    i1 = data.draw(st.integers(0, 6))
    if remove_digit(n, b, i2) < 1:
        return
    sol = solve(b, n, i1, i2)
    if isinstance(sol, Finite):
        for r in sol.records:
            assert digit_at(r.numerator, b, i1) == digit_at(n, b, i2)
            assert r.numerator * r.reduced_den == r.reduced_num * n


def test_deterministic():
    assert solve(10, 6664, 2, 3) == solve(10, 6664, 2, 3)
