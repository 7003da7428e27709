#!/usr/bin/env python
# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regkit.core.field import QQ, Fp
from regkit.core.order import LEX
from regkit.core.poly import Polynomial, poly_arith
from regkit.core.ring import PolynomialRing
from regkit.util.exceptions import InhomogeneousError, ParameterError, RingMismatchError


def test_str(R2):
    x, y = R2.gens()
    assert str((x + y) * (x - y)) == "x^2 - y^2"
    assert str(Polynomial(R2, {(1, 0): Fraction(-3, 2)})) == "-3/2*x"
    assert str(Polynomial(R2)) == "0"
    assert str(x**2 * y + 1) == "x^2*y + 1"
    assert str(-x - 2 * y) == "-x - 2*y"


def test_str_prime_field():
    R = PolynomialRing(Fp(5), ["x", "y"])
    x, y = R.gens()
    assert str(x - y) == "x + 4*y"


def test_degrees(R2):
    x, y = R2.gens()
    assert (x**2 * y).degree() == (3,)
    assert (x**2 + y**2).is_homogeneous()
    assert not (x**2 + y).is_homogeneous()
    with pytest.raises(InhomogeneousError):
        (x**2 + y).degree()
    with pytest.raises(ParameterError):
        Polynomial(R2).degree()


def test_leading_terms(R2):
    x, y = R2.gens()
    f = x * y**2 + x**2
    assert f.leading_monomial() == (1, 2)
    assert f.leading_monomial(LEX) == (2, 0)


def test_ring_mismatch(R2):
    S = PolynomialRing(QQ, ["x", "z"])
    with pytest.raises(RingMismatchError):
        R2.gens()[0] + S.gens()[0]
    with pytest.raises(RingMismatchError):
        Polynomial(R2, {(1, 0, 0): 1})


def test_scalars(R2):
    x, y = R2.gens()
    assert x * 2 == x + x
    assert (x + 1) - 1 == x
    assert 3 - x == -(x - 3)
    assert x.scale(0).is_zero()
    assert x * QQ.element("1/2") == x.scale(Fraction(1, 2))


def test_pow(R2):
    x, y = R2.gens()
    assert (x + y) ** 0 == 1
    assert str((x + y) ** 3) == "x^3 + 3*x^2*y + 3*x*y^2 + y^3"
    with pytest.raises(ParameterError):
        x ** -1


def test_substitute(R2):
    x, y = R2.gens()
    assert str((x**2).substitute({0: x + y})) == "x^2 + 2*x*y + y^2"
    B = PolynomialRing(QQ, ["x", "y", "Y1", "Y2"])
    X, Yv, Y1, Y2 = B.gens()
    f = Yv * Y1 - X * Y2
    assert f.substitute({2: x, 3: y}).is_zero()


def test_change_ring(R2):
    x, y = R2.gens()
    S = PolynomialRing(QQ, ["y", "x"])
    assert x.change_ring(S) == S.gens()[1]
    T = PolynomialRing(Fp(3), ["x", "y"])
    assert str((4 * x).change_ring(T)) == "x"
    with pytest.raises(RingMismatchError):
        x.change_ring(PolynomialRing(QQ, ["z"]))


def test_change_ring_drops_unused_variables(R3):
    x, y, z = R3.gens()
    P = PolynomialRing(QQ, ["y", "x"])
    Y, X = P.gens()
    f = (x * y + y**2).change_ring(P)
    assert f == X * Y + Y**2
    assert f.ring == P
    with pytest.raises(RingMismatchError):
        (x * z).change_ring(P)


def test_primitive(R2):
    x, y = R2.gens()
    f = x.scale(Fraction(1, 2)) + y.scale(Fraction(1, 3))
    assert str(f.primitive()) == "3*x + 2*y"
    assert str((-2 * x + 4 * y).primitive()) == "x - 2*y"
    R = PolynomialRing(Fp(7), ["x", "y"])
    u, v = R.gens()
    assert str((3 * u + v).primitive()) == "x + 5*y"


def test_poly_arith(R2):
    x, y = R2.gens()
    assert poly_arith("add", x, y) == x + y
    assert poly_arith("mul", x, y) == x * y
    assert poly_arith("scale", x, 3) == 3 * x
    with pytest.raises(ParameterError):
        poly_arith("scale", x, y)
    with pytest.raises(ParameterError):
        poly_arith("div", x, y)


def test_hash(R2):
    x, y = R2.gens()
    assert len({x + y, y + x, x}) == 2


R = PolynomialRing(QQ, ["x", "y", "z"])
terms = st.dictionaries(
    st.tuples(*[st.integers(min_value=0, max_value=3)] * 3),
    st.integers(min_value=-5, max_value=5),
    max_size=4,
)
polys = terms.map(lambda t: Polynomial(R, t))


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f + g) - g == f
    assert (f * g) * h == f * (g * h)


@given(polys, polys)
def test_degree_of_product(f, g):
    if f and g and f.is_homogeneous() and g.is_homogeneous():
        assert (f * g).degree() == (f.degree()[0] + g.degree()[0],)
