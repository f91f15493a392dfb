from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulersym.dirichlet import enumerate_characters, quadratic_character, trivial_character
from eulersym.euler import (
    alt_power_sum,
    euler_generating_series,
    euler_numbers,
    euler_polynomial,
    euler_polynomial_coeffs,
    power_sum_series_check,
)
from eulersym.exactnum import DomainError
from eulersym.series import coeff_egf

from oracles import (
    brute_alt_power_sum,
    classical_euler_numbers_by_division,
    classical_euler_poly,
    euler_number_via_distribution,
)

SMALL_MODULI = [1, 3, 5, 7, 9]
ALL_CHARS = [chi for d in SMALL_MODULI for chi in enumerate_characters(d)]


def char_id(chi):
    return f"d{chi.modulus}-{chi.index}"


def test_classical_table():
    vals = [v.to_rational() for v in euler_numbers(trivial_character(), 8).values]
    assert vals[:4] == [1, Fraction(-1, 2), 0, Fraction(1, 4)]
    assert vals == classical_euler_numbers_by_division(8)


def test_quadratic_mod3_values():
    q = quadratic_character(3)
    table = euler_numbers(q, 6)
    assert table[0] == -2
    assert table[1] == 0
    # stabilized alternating sum over one period
    assert table[0] == sum((-1) ** j * q.signed_values()[j] for j in range(3))


@pytest.mark.parametrize("chi", ALL_CHARS, ids=char_id)
def test_distribution_relation_oracle(chi):
    table = euler_numbers(chi, 7)
    for n in range(8):
        assert table[n] == euler_number_via_distribution(list(chi.values), n)


def test_tables_grow_and_shrink_consistently():
    chi = enumerate_characters(7)[1]
    short = euler_numbers(chi, 3)
    long = euler_numbers(chi, 9)
    assert long.values[:4] == short.values
    assert len(euler_numbers(chi, 2)) == 3


def test_polynomial_examples():
    triv = trivial_character()
    assert euler_polynomial(triv, 2, 2) == 2
    for x in range(6):
        assert euler_polynomial(triv, 2, x) == x * x - x
    for chi in ALL_CHARS[:6]:
        assert euler_polynomial(chi, 0, Fraction(7, 3)) == euler_numbers(chi, 0)[0]
        for n in range(5):
            assert euler_polynomial(chi, n, 0) == euler_numbers(chi, n)[n]


@pytest.mark.parametrize("n", range(9))
def test_classical_reflection_on_grid(n):
    triv = trivial_character()
    for x in range(n + 1):
        assert euler_polynomial(triv, n, x) + euler_polynomial(triv, n, x + 1) == 2 * x**n
        assert euler_polynomial(triv, n, x) == classical_euler_poly(n, Fraction(x))


@pytest.mark.parametrize("chi", ALL_CHARS[:8], ids=char_id)
def test_polynomial_matches_generating_function(chi):
    x = Fraction(5, 3)
    s = euler_generating_series(chi, 6, x)
    for n in range(7):
        assert coeff_egf(s, n) == euler_polynomial(chi, n, x)


def test_polynomial_coeffs_consistent():
    chi = enumerate_characters(5)[1]
    cs = euler_polynomial_coeffs(chi, 4)
    x = Fraction(-2, 7)
    assert sum((c * x**j for j, c in enumerate(cs)), cs[0] * 0) == euler_polynomial(chi, 4, x)


def test_power_sum_examples():
    q = quadratic_character(3)
    assert alt_power_sum(q, 0, 2) == -2
    assert alt_power_sum(q, 2, 2) == -5
    assert alt_power_sum(trivial_character(), 2, 4) == 10
    for chi in enumerate_characters(5)[1:]:
        for k in range(1, 4):
            assert alt_power_sum(chi, k, 0) == 0
    # 0^0 = 1 on the trivial character
    assert alt_power_sum(trivial_character(), 0, 0) == 1


@given(st.sampled_from(ALL_CHARS), st.integers(0, 6), st.integers(0, 40))
def test_power_sum_brute(chi, k, n):
    assert alt_power_sum(chi, k, n) == brute_alt_power_sum(list(chi.values), k, n)


def test_power_sum_series_check_examples():
    for chi in ALL_CHARS:
        assert power_sum_series_check(chi, 1, 5)
    assert power_sum_series_check(quadratic_character(3), 3, 8)
    with pytest.raises(DomainError):
        power_sum_series_check(trivial_character(), 2, 4)


@given(st.sampled_from(ALL_CHARS), st.sampled_from([1, 3, 5, 7]), st.integers(0, 6))
def test_power_sum_difference_of_euler_values(chi, w, k):
    # T_k(wd-1) = (E_k + E_k(wd)) / 2  up to the sign (-1)^{wd} = -1 for odd w, d
    d = chi.modulus
    lhs = alt_power_sum(chi, k, w * d - 1) * 2
    rhs = euler_numbers(chi, k)[k] + euler_polynomial(chi, k, w * d)
    assert lhs == rhs


def test_negative_arguments_rejected():
    chi = trivial_character()
    with pytest.raises(DomainError):
        euler_numbers(chi, -1)
    with pytest.raises(DomainError):
        euler_polynomial(chi, -1, 0)
    with pytest.raises(DomainError):
        alt_power_sum(chi, -1, 3)
