#!/usr/bin/env python
# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regkit.core.field import QQ, Fp, FieldValue, field_arith, field_inverse
from regkit.util.exceptions import DivisionByZeroError, FieldError, ParameterError


def test_prime_field_mul():
    assert Fp(7).mul(3, 5) == 1


def test_rational_add():
    assert QQ.add(QQ(1, 2), QQ(1, 3)) == Fraction(5, 6)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 32001, 2**31 + 11])
def test_fp_bad_characteristic(p):
    with pytest.raises(ParameterError):
        Fp(p)


def test_canon():
    assert QQ("1/2") == Fraction(1, 2)
    assert Fp(5)(Fraction(1, 2)) == 3
    assert Fp(5).canon(-1) == 4
    with pytest.raises(DivisionByZeroError):
        Fp(5).canon(Fraction(1, 5))


def test_inverse_of_zero():
    with pytest.raises(DivisionByZeroError):
        field_inverse(QQ.element(0))
    with pytest.raises(ZeroDivisionError):
        Fp(3).inv(0)


def test_rational_inverse_of_int_is_exact():
    assert QQ.inv(3) == Fraction(1, 3)
    assert isinstance(QQ.inv(3), Fraction)


def test_field_arith():
    assert field_arith("add", QQ.element("1/2"), QQ.element("1/3")).value == Fraction(5, 6)
    assert field_arith("div", Fp(7).element(1), Fp(7).element(3)).value == 5
    with pytest.raises(ParameterError):
        field_arith("pow", QQ.element(1), QQ.element(2))


def test_mixed_fields():
    with pytest.raises(FieldError):
        QQ.element(1) + Fp(5).element(1)


def test_primitive_scale():
    assert QQ.primitive_scale([Fraction(1, 2), Fraction(-1, 3)]) == 6
    assert QQ.primitive_scale([Fraction(-2), Fraction(4)]) == Fraction(-1, 2)
    assert Fp(5).primitive_scale([2, 3]) == 1


def test_str():
    assert str(QQ) == "QQ"
    assert str(Fp(32003)) == "Fp(32003)"
    assert str(QQ.element("-3/2")) == "-3/2"


@given(st.integers(min_value=1, max_value=32002))
def test_fp_inverse(a):
    F = Fp(32003)
    assert F.mul(a, F.inv(a)) == 1


@given(
    st.fractions(max_denominator=50).filter(lambda q: q != 0),
    st.fractions(max_denominator=50),
)
def test_qq_division(a, b):
    x, y = QQ.element(b), QQ.element(a)
    assert (x / y) * y == x


@given(st.integers(min_value=-1000, max_value=1000), st.integers(min_value=-1000, max_value=1000))
def test_fp_is_a_ring_hom(a, b):
    F = Fp(101)
    assert F.canon(a * b) == F.mul(F.canon(a), F.canon(b))
    assert F.canon(a + b) == F.add(F.canon(a), F.canon(b))


def test_field_value_is_hashable():
    assert len({FieldValue(QQ, Fraction(1)), FieldValue(QQ, Fraction(1))}) == 1
