#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest

from regkit.core.module import FreeModule, ModuleVector, multidegree_of
from regkit.core.order import DEGREVLEX, MonomialOrder
from regkit.util.exceptions import ParameterError, RingMismatchError


def test_multidegree(R2):
    x, y = R2.gens()
    F = FreeModule(R2, [1, 1])
    assert multidegree_of(ModuleVector.from_entries(F, [x, y])) == (2,)
    assert ModuleVector.from_entries(F, [x, y**2]).degree() is None
    with pytest.raises(ParameterError):
        F.zero().degree()


def test_twists(R2):
    F = FreeModule(R2, [0, 2])
    assert F.shift(1).twists == ((1,), (3,))
    assert F.direct_sum(FreeModule.cyclic(R2)).rank == 3
    assert FreeModule.cyclic(R2, 4).twists == ((4,),)
    with pytest.raises(ParameterError):
        FreeModule(R2, [(1, 0)])


def test_entries(R2):
    x, y = R2.gens()
    F = FreeModule(R2, [0, 0])
    v = ModuleVector.from_entries(F, [x, y])
    assert v.entries() == [x, y]
    assert v.entry(1) == y
    assert v.scale(x).entries() == [x**2, x * y]
    assert (v - v).is_zero()
    assert str(v) == "[x, y]"
    with pytest.raises(ParameterError):
        ModuleVector.from_entries(F, [x])


def test_leading_term(R2):
    x, y = R2.gens()
    F = FreeModule(R2, [0, 0])
    v = ModuleVector.from_entries(F, [y, x**2])
    assert v.leading_term(DEGREVLEX)[0] == (0, (0, 1))
    assert v.leading_term(MonomialOrder(module="top"))[0] == (1, (2, 0))


def test_mismatch(R2, R3):
    x, y = R2.gens()
    with pytest.raises(RingMismatchError):
        ModuleVector(FreeModule(R2, [0]), {(1, (0, 0)): 1})
    with pytest.raises(RingMismatchError):
        ModuleVector.from_entries(FreeModule(R3, [0]), [x])
    a = ModuleVector.from_entries(FreeModule(R2, [0]), [x])
    b = ModuleVector.from_entries(FreeModule(R2, [1]), [x])
    with pytest.raises(RingMismatchError):
        a + b
