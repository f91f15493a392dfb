from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulersym.dirichlet import (
    char_value,
    conductor,
    enumerate_characters,
    factorize,
    get_character,
    least_primitive_root,
    quadratic_character,
    totient,
    trivial_character,
)
from eulersym.exactnum import CycNumber, DomainError

from oracles import brute_conductor, brute_force_characters

ODD = [1, 3, 5, 7, 9, 11, 13, 15, 21, 25, 27]


def test_counts():
    assert len(enumerate_characters(1)) == 1
    assert len(enumerate_characters(3)) == 2
    chars5 = enumerate_characters(5)
    assert len(chars5) == 4
    assert sum(c.is_primitive for c in chars5) == 3


@pytest.mark.parametrize("d", ODD)
def test_count_is_totient(d):
    assert len(enumerate_characters(d)) == totient(d)


@pytest.mark.parametrize("d", [1, 3, 5, 7, 9, 15])
def test_matches_brute_force(d):
    brute = brute_force_characters(d)
    ours = enumerate_characters(d)
    assert len(brute) == len(ours)
    for chi in ours:
        assert sum(all(x == y for x, y in zip(chi.values, row)) for row in brute) == 1


def test_values():
    assert char_value(trivial_character(1), 0) == 1
    q = quadratic_character(3)
    assert char_value(q, 2) == -1
    assert [str(v) for v in q.values] == ["0", "1", "-1"]
    for chi in enumerate_characters(3):
        assert char_value(chi, 6) == 0


def test_conductor_examples():
    assert conductor(trivial_character(1)) == 1
    assert conductor(quadratic_character(3)) == 3
    lifted = quadratic_character(9)
    assert all(lifted(a) == quadratic_character(3)(a) for a in range(1, 30) if a % 3)
    assert conductor(lifted) == 3
    assert not lifted.is_primitive


@pytest.mark.parametrize("d", [1, 3, 5, 7, 9, 15, 21, 25])
def test_conductor_matches_brute(d):
    for chi in enumerate_characters(d):
        assert chi.conductor == brute_conductor(list(chi.values))


def test_ordering_is_lexicographic_in_exponents():
    for d in (15, 21, 45):
        exps = [c.generator_exponents for c in enumerate_characters(d)]
        assert exps == sorted(exps)
        assert [c.index for c in enumerate_characters(d)] == list(range(len(exps)))


def test_even_and_nonpositive_rejected():
    for d in (0, -3, 2, 4, 10):
        with pytest.raises(DomainError):
            enumerate_characters(d)
    with pytest.raises(DomainError):
        get_character(3, 2)


def test_primitive_roots_and_factorization():
    assert least_primitive_root(7) == 3
    assert least_primitive_root(9) == 2
    assert least_primitive_root(25) == 2
    assert factorize(45) == [(3, 2), (5, 1)]


def test_real_characters_have_sign_values():
    for d in (3, 5, 9, 15):
        for chi in enumerate_characters(d):
            if chi.is_real:
                assert set(chi.signed_values()) <= {-1, 0, 1}


@given(st.sampled_from(ODD), st.integers(0, 10**4), st.integers(0, 10**4), st.data())
def test_multiplicative_and_periodic(d, a, b, data):
    chars = enumerate_characters(d)
    chi = chars[data.draw(st.integers(0, len(chars) - 1))]
    assert chi(a * b) == chi(a) * chi(b)
    assert chi(a + d) == chi(a)
    assert (chi(a) == 0) == (math.gcd(a, d) != 1)


@given(st.sampled_from(ODD), st.data())
def test_orthogonality(d, data):
    chars = enumerate_characters(d)
    i = data.draw(st.integers(0, len(chars) - 1))
    total = sum((chars[i](a) for a in range(d)), CycNumber.zero(1))
    assert total == (totient(d) if chars[i].order == 1 else 0)


@given(st.sampled_from(ODD), st.data())
def test_values_have_stated_order(d, data):
    chars = enumerate_characters(d)
    chi = chars[data.draw(st.integers(0, len(chars) - 1))]
    r = chi.order
    for a in range(d):
        if math.gcd(a, d) == 1:
            assert chi(a) ** r == 1
    exps = {e for e in chi.exponent_table if e is not None}
    assert math.gcd(r, *exps) == 1 or r == 1
