#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest

from regkit.core.field import Fp
from regkit.core.ideal import Ideal
from regkit.core.ring import PolynomialRing
from regkit.util.exceptions import InhomogeneousError, ParameterError, RegkitWarning, RingMismatchError


def test_minimal(R2):
    x, y = R2.gens()
    I = Ideal(R2, [x, x, y])
    assert [str(f) for f in I.minimal().generators] == ["x", "y"]
    assert not I.is_minimal()
    assert I.minimal().is_minimal()


def test_generators_are_primitive(R2):
    x, y = R2.gens()
    I = Ideal(R2, [-2 * x, x.scale(0)])
    assert [str(f) for f in I.generators] == ["x"]


def test_inhomogeneous(R2):
    x, y = R2.gens()
    with pytest.raises(InhomogeneousError):
        Ideal(R2, [x**2 + y])


def test_degrees(R2):
    x, y = R2.gens()
    I = Ideal(R2, [y**3, x**2])
    assert I.degrees() == [(2,), (3,)]
    assert I.generator_degrees() == [2, 3]
    assert not I.is_equigenerated()
    with pytest.raises(ParameterError):
        I.require_equigenerated()
    assert Ideal(R2, [x**2, x * y]).require_equigenerated() == 2


def test_power(R2):
    x, y = R2.gens()
    I = Ideal(R2, [x, y])
    assert str(I.power(2)) == "(x^2, x*y, y^2)"
    assert len(I.power(4)) == 5
    with pytest.warns(RegkitWarning):
        assert I.power(0).is_unit()
    with pytest.raises(ParameterError):
        I.power(-1)


def test_equality(R2):
    x, y = R2.gens()
    assert Ideal(R2, [x, y]) == Ideal(R2, [x + y, x - y])
    assert Ideal(R2, [x**2]) != Ideal(R2, [x])
    assert hash(Ideal(R2, [x, y, x + y])) == hash(Ideal(R2, [x, y]))


def test_arithmetic(R2):
    x, y = R2.gens()
    I, J = Ideal(R2, [x]), Ideal(R2, [y])
    assert str(I * J) == "(x*y)"
    assert I + J == Ideal(R2, [x, y])
    assert (I + J).contains(x * y + y**2)
    assert not I.contains(y)
    with pytest.raises(RingMismatchError):
        I + Ideal(PolynomialRing(Fp(7), ["x", "y"]), [])


def test_from_strings(R2):
    I = Ideal.from_strings(R2, ["x^2", "x*y", "2*x^2 - x*y"])
    assert len(I.minimal()) == 2
    assert I.change_field(Fp(5)).ring.field == Fp(5)


def test_predicates(R2):
    x, y = R2.gens()
    assert Ideal(R2, []).is_zero()
    assert Ideal(R2, [x * y, y**2]).is_monomial()
    assert not Ideal(R2, [x + y]).is_monomial()
