from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulersym.exactnum import (
    CycNumber,
    DomainError,
    cyc_eq,
    cyc_inv,
    cyc_mul,
    cyclotomic_modulus,
    euler_phi,
    render,
)


@pytest.mark.parametrize(
    "m, expected",
    [(1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (3, (1, 1, 1)), (6, (1, -1, 1)), (9, (1, 0, 0, 1, 0, 0, 1))],
)
def test_cyclotomic_modulus(m, expected):
    assert cyclotomic_modulus(m) == expected


def test_cyclotomic_modulus_degree_is_phi():
    for m in range(1, 40):
        assert len(cyclotomic_modulus(m)) - 1 == euler_phi(m)


def test_cyclotomic_modulus_rejects_zero():
    with pytest.raises(DomainError):
        cyclotomic_modulus(0)


def test_zeta4_squared():
    z = CycNumber.zeta(4, 1)
    assert cyc_mul(z, z) == CycNumber.rational(-1, 4)


def test_one_plus_zeta3_product():
    z = CycNumber.zeta(3, 1)
    assert cyc_mul(1 + z, 1 + z * z) == 1


def test_multiplicative_identity():
    a = CycNumber(5, [Fraction(1, 3), 2, -1])
    assert cyc_mul(CycNumber.one(5), a) == a


def test_inverse_examples():
    assert cyc_inv(CycNumber.rational(2, 1)) == Fraction(1, 2)
    z = CycNumber.zeta(4, 1)
    assert cyc_inv(z) == -z
    with pytest.raises(ZeroDivisionError):
        cyc_inv(CycNumber.zero(4))


def test_equality_across_orders():
    assert cyc_eq(CycNumber.one(1), CycNumber.one(4))
    z = CycNumber.zeta(4, 1)
    assert not cyc_eq(z, -z)
    assert cyc_eq(CycNumber.zeta(6, 2), CycNumber.zeta(3, 1).lift(6))
    assert CycNumber.zeta(6, 2) == CycNumber.zeta(3, 1)


def test_hash_respects_cross_order_equality():
    assert hash(CycNumber.zeta(6, 2)) == hash(CycNumber.zeta(3, 1))
    assert hash(CycNumber.rational(Fraction(3, 7), 12)) == hash(CycNumber.rational(Fraction(3, 7), 1))


def test_order_mismatch_in_cyc_mul():
    with pytest.raises(DomainError):
        cyc_mul(CycNumber.zeta(3, 1), CycNumber.zeta(4, 1))


def test_mixed_order_operators_lift():
    s = CycNumber.zeta(3, 1) + CycNumber.zeta(4, 1)
    assert s.order == 12


def test_render():
    assert render(CycNumber.rational(Fraction(-1, 2), 1)) == "-1/2"
    assert render(CycNumber.zero(3)) == "0"
    assert render(CycNumber.zeta(4, 1)) == "z"
    assert render(CycNumber(3, [1, Fraction(2, 3)])) == "1 + 2/3*z"


def test_canonical_denominator_positive():
    a = CycNumber(5, [Fraction(-2, 6), Fraction(4, -6)])
    assert a.denominator == 3
    assert a.numerators[:2] == (-1, -2)


orders = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 12])
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyc(draw, order=None):
    m = draw(orders) if order is None else order
    coeffs = draw(st.lists(small, min_size=0, max_size=2 * m))
    return CycNumber(m, coeffs)


@st.composite
def same_order_triple(draw):
    m = draw(orders)
    return draw(cyc(m)), draw(cyc(m)), draw(cyc(m))


@given(same_order_triple())
def test_ring_axioms(t):
    a, b, c = t
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyc())
def test_inverse_property(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            cyc_inv(a)
    else:
        assert a * cyc_inv(a) == 1


@given(cyc(), st.sampled_from([2, 3, 5]))
def test_lift_preserves_value_and_hash(a, k):
    b = a.lift(a.order * k)
    assert b == a
    assert hash(b) == hash(a)


@given(cyc())
def test_rational_roundtrip(a):
    if a.is_rational():
        assert CycNumber.rational(a.to_rational(), 1) == a


@given(orders, st.integers(-30, 30), st.integers(-30, 30))
def test_zeta_powers_multiply(m, i, j):
    assert CycNumber.zeta(m, i) * CycNumber.zeta(m, j) == CycNumber.zeta(m, i + j)
