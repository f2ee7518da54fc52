from fractions import Fraction

import pytest

from padiczoo.core import DomainError, InsufficientPrecision, PadicNumber
from padiczoo.quotients import PadicFunction
from padiczoo.vanderput import (
    ball_exponent,
    basis_eval,
    decompose,
    drop_leading_digit,
    lip_criterion,
    n1_criterion,
    partial_sum,
    power_str,
    schedule_exponent,
    series_rows,
)


def test_ball_exponent():
    assert ball_exponent(1, 2) == 1
    assert ball_exponent(3, 2) == 2
    assert ball_exponent(8, 2) == 4
    assert ball_exponent(9, 3) == 3


def test_drop_leading_digit():
    assert drop_leading_digit(13, 2) == 5      # 1101 -> 101
    assert drop_leading_digit(9, 3) == 0       # 100 -> 00
    assert drop_leading_digit(7, 5) == 2       # 12 -> 2
    with pytest.raises(DomainError):
        drop_leading_digit(0, 2)


def test_basis_e3_brute_force():
    # at p = 2: e_3(x) = 1 iff x = 3 (mod 4)
    for x in range(8):
        want = 1 if x % 4 == 3 else 0
        assert basis_eval(3, PadicNumber.from_int(x, 2)) == want


def test_basis_contracts():
    assert basis_eval(0, PadicNumber.zero(3)) == 1
    assert basis_eval(5, PadicNumber.zero(3)) == 0
    with pytest.raises(DomainError):
        basis_eval(2, PadicNumber.from_rational(1, 3, 3))
    with pytest.raises(InsufficientPrecision):
        basis_eval(9, PadicNumber.bounded_zero(3, 1))
    # a resolved bounded zero decides membership
    assert basis_eval(9, PadicNumber.bounded_zero(3, 5)) == 0


def test_decompose_identity():
    # for f(x) = x: a_0 = 0 and a_n = (leading digit of n) * p^s
    p = 3
    ident = PadicFunction(lambda x: x)
    series = decompose(ident, p)
    assert series.coeff(0).is_exact_zero
    for n in range(1, 101):
        s, q = 0, n
        while q >= p:
            q //= p
            s += 1
        want = PadicNumber.from_int(q * p ** s, p)
        assert series.coeff(n).agrees_with(want)


def test_partial_sum_reconstructs_identity():
    p = 3
    series = decompose(PadicFunction(lambda x: x), p)
    for k in (0, 1, 5, 13, 26):
        got = partial_sum(series, 30, PadicNumber.from_int(k, p))
        assert got.agrees_with(PadicNumber.from_int(k, p))


def test_schedule_exponent():
    assert schedule_exponent(1, 2) == 1
    assert schedule_exponent(8, 2) == 4
    assert schedule_exponent(2, 2) == 1
    with pytest.raises(DomainError):
        schedule_exponent(0, 2)
    # raw values may dip, the consumer applies a cumulative max; here just
    # check positivity over a range
    assert all(schedule_exponent(k, 3) >= 1 for k in range(1, 200))


def test_n1_criterion_windows():
    p = 2
    rows = [(n, Fraction(1, 2 ** n)) for n in range(1, 65)]
    rep = n1_criterion(rows, p)
    assert rep.kind == "n1"
    assert rep.tends_to_zero()
    assert rep.window_maxima[0][0] == 1
    # |a_n| n = n / 2^n peaks at n = 1, 2
    assert rep.running_sup == Fraction(1, 2)


def test_lip_criterion_unbounded():
    p = 2
    rows = [(n, Fraction(1, 2 ** n)) for n in range(1, 40)]
    rep = lip_criterion(rows, Fraction(2), p)
    assert rep.kind == "lip"
    assert rep.running_sup > 1  # n^2/2^n peaks above 1 early on
    with pytest.raises(DomainError):
        lip_criterion(rows, Fraction(-1), p)


def test_csv_rendering():
    p = 2
    rows = [(n, Fraction(1, 2 ** n)) for n in range(1, 5)]
    rep = n1_criterion(rows, p)
    text = rep.to_csv()
    lines = text.strip().splitlines()
    assert lines[0] == "n,coeff_norm,coeff_norm_decimal,product"
    assert lines[1].startswith("1,2^-1,0.5,")


def test_power_str():
    assert power_str(2, Fraction(1, 8)) == "2^-3"
    assert power_str(3, Fraction(9)) == "3^2"
    assert power_str(5, Fraction(0)) == "0"
    assert power_str(7, Fraction(1)) == "7^0"


def test_series_rows_zero_function():
    p = 3
    zero = PadicFunction(lambda x: PadicNumber.zero(p))
    series = decompose(zero, p)
    assert all(norm == 0 for _, norm in series_rows(series, 20))
