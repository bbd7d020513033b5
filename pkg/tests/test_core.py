"""Group law, inverses, powers, conjugation, and the affine picture."""

from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleingroup import (
    AFFINE_IDENTITY,
    AffineMap,
    GroupElement,
    IDENTITY,
    as_affine,
    conj,
    inv,
    mul,
    power,
)

small = st.integers(min_value=-50, max_value=50)
huge = st.integers(min_value=-(10**40), max_value=10**40)
elem_small = st.builds(GroupElement, small, small)
elem_huge = st.builds(GroupElement, huge, huge)


def test_known_products():
    assert mul(GroupElement(2, 1), GroupElement(3, 1)) == GroupElement(-1, 2)
    assert mul(GroupElement(1, 0), GroupElement(0, 1)) == GroupElement(1, 1)
    assert mul(GroupElement(0, 1), GroupElement(1, 0)) == GroupElement(-1, 1)
    assert mul(GroupElement(5, 2), GroupElement(-3, 4)) == GroupElement(2, 6)


def test_noncommutative():
    a, b = GroupElement(1, 0), GroupElement(0, 1)
    assert mul(a, b) != mul(b, a)


def test_identity_element():
    g = GroupElement(7, -3)
    assert mul(g, IDENTITY) == g
    assert mul(IDENTITY, g) == g
    assert IDENTITY.is_identity()
    assert not g.is_identity()


def test_known_inverses():
    assert inv(GroupElement(3, 1)) == GroupElement(3, -1)
    assert inv(GroupElement(3, 2)) == GroupElement(-3, -2)
    assert inv(GroupElement(0, 5)) == GroupElement(0, -5)
    assert inv(IDENTITY) == IDENTITY


def test_power_closed_forms():
    g = GroupElement(3, 2)
    assert power(g, 5) == GroupElement(15, 10)
    assert power(g, -2) == GroupElement(-6, -4)
    h = GroupElement(5, 1)
    assert power(h, 2) == GroupElement(0, 2)
    assert power(h, 3) == GroupElement(5, 3)
    assert power(h, -4) == GroupElement(0, -4)
    assert power(h, -5) == GroupElement(5, -5)
    assert power(h, 0) == IDENTITY


def test_power_zero_and_one():
    g = GroupElement(-4, 7)
    assert power(g, 0) == IDENTITY
    assert power(g, 1) == g
    assert power(g, -1) == inv(g)


def test_conj_examples():
    t = GroupElement(0, 1)
    assert conj(t, GroupElement(1, 0)) == GroupElement(-1, 0)
    assert conj(t, GroupElement(0, 2)) == GroupElement(0, 2)
    assert conj(GroupElement(1, 0), GroupElement(0, 1)) == GroupElement(2, 1)


def test_operator_sugar():
    g, h = GroupElement(2, 3), GroupElement(-1, 4)
    assert g * h == mul(g, h)
    assert g**3 == power(g, 3)
    assert g.inverse() == inv(g)


@given(elem_huge, elem_huge, elem_huge)
def test_associativity(g, h, k):
    assert mul(mul(g, h), k) == mul(g, mul(h, k))


@given(elem_huge)
def test_inverse_law(g):
    assert mul(g, inv(g)) == IDENTITY
    assert mul(inv(g), g) == IDENTITY
    assert inv(inv(g)) == g


@given(elem_huge, elem_huge)
def test_inverse_antihomomorphism(g, h):
    assert inv(mul(g, h)) == mul(inv(h), inv(g))


@given(elem_small, st.integers(min_value=-8, max_value=8))
def test_power_matches_iteration(g, k):
    if k >= 0:
        expected = reduce(mul, [g] * k, IDENTITY)
    else:
        expected = reduce(mul, [inv(g)] * (-k), IDENTITY)
    assert power(g, k) == expected


@given(elem_huge, st.integers(-20, 20), st.integers(-20, 20))
def test_power_additivity(g, j, k):
    assert mul(power(g, j), power(g, k)) == power(g, j + k)


@given(elem_huge, elem_huge)
def test_conj_matches_definition(t, g):
    assert conj(t, g) == mul(mul(t, g), inv(t))


@given(elem_huge, elem_huge, elem_huge)
def test_conj_is_homomorphism(t, g, h):
    assert conj(t, mul(g, h)) == mul(conj(t, g), conj(t, h))


def test_subgroup_of_translations_is_abelian():
    # elements with even twist commute with each other
    a, b = GroupElement(3, 2), GroupElement(-5, 4)
    assert mul(a, b) == mul(b, a)


def test_affine_apply():
    a = as_affine(GroupElement(2, 3))
    assert a.sign == -1 and a.shift_x == 2 and a.shift_y == 3
    assert a.apply(Fraction(1, 2), Fraction(0)) == (Fraction(3, 2), Fraction(3))


@given(elem_small, elem_small)
def test_affine_homomorphism(g, h):
    assert as_affine(g).compose(as_affine(h)) == as_affine(mul(g, h))


@given(elem_small)
def test_affine_faithful(g):
    assert as_affine(g).is_identity() == g.is_identity()


def test_affine_identity():
    assert AFFINE_IDENTITY == as_affine(IDENTITY)
    assert AFFINE_IDENTITY.is_identity()


def test_affine_sign_validation():
    with pytest.raises(ValueError):
        AffineMap(2, 0, 0)
