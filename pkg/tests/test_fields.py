"""Field arithmetic: rationals, prime fields, and characteristic dispatch."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from siltkit.fields import QQ, FpElement, PrimeField, field_of_characteristic

F5 = PrimeField(5)
F2 = PrimeField(2)

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=10**4
)
f5_elements = st.integers(min_value=0, max_value=4).map(F5.coerce)


def test_characteristic_dispatch():
    assert field_of_characteristic(0) is QQ
    assert field_of_characteristic(5).characteristic == 5
    assert field_of_characteristic(2).characteristic == 2


def test_characteristic_rejects_composites():
    with pytest.raises(ValueError):
        field_of_characteristic(4)
    with pytest.raises(ValueError):
        field_of_characteristic(-3)
    with pytest.raises(ValueError):
        field_of_characteristic(1)


def test_rational_basics():
    assert QQ.zero == Fraction(0)
    assert QQ.one == Fraction(1)
    assert QQ.coerce("2/3") == Fraction(2, 3)
    assert QQ.characteristic == 0


def test_prime_field_basics():
    three = F5.coerce(3)
    assert three + three == F5.coerce(1)
    assert three * three == F5.coerce(4)
    assert -three == F5.coerce(2)
    assert (F5.one / three) * three == F5.one
    assert F5.coerce("7") == F5.coerce(2)


def test_prime_field_coerces_fractions():
    # 1/2 = 3 mod 5 since 2 * 3 = 1
    assert F5.coerce(Fraction(1, 2)) == F5.coerce(3)
    with pytest.raises(ZeroDivisionError):
        F5.coerce(Fraction(1, 5))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F5.one / F5.zero


def test_fp_element_repr_is_the_value():
    assert repr(F5.coerce(3)) == "3"


@given(rationals, rationals, rationals)
def test_rational_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + QQ.zero == a
    assert a * QQ.one == a


@given(f5_elements, f5_elements, f5_elements)
def test_prime_field_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + F5.zero == a
    assert a * F5.one == a
    assert a + (-a) == F5.zero


@given(f5_elements)
def test_prime_field_inverses(a):
    if a != F5.zero:
        assert a * (F5.one / a) == F5.one


def test_distinct_primes_do_not_mix():
    assert F5.coerce(3) != F2.coerce(1)
