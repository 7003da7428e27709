#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest

from regkit.asymptotics import nonstandard_ring
from regkit.core.field import QQ, Fp
from regkit.core.ideal import Ideal
from regkit.core.module import FreeModule
from regkit.core.ring import PolynomialRing
from regkit.koszul import KoszulComplex, koszul_homology, koszul_summary, reg_via_duality, t_invariants
from regkit.resolve import Cokernel, betti_table, minimal_free_resolution, quotient_ring, regularity, shift_module
from regkit.util.exceptions import ParameterError
from regkit.util.utils import NEG_INF


def test_homology_of_residue_field(R2):
    k = quotient_ring(Ideal(R2, R2.gens()))
    assert koszul_homology(k, 0, 0) == 1
    assert koszul_homology(k, 1, 1) == 2
    assert koszul_homology(k, 2, 2) == 1
    assert koszul_homology(k, 1, 2) == 0
    assert koszul_homology(k, 3, 3) == 0


def test_summary_of_ideal(R2):
    x, y = R2.gens()
    s = koszul_summary(Ideal(R2, [x**2, x * y]))
    assert s.ranks == {(0, 2): 2, (1, 3): 1}
    assert s.t == [2, 3, NEG_INF]
    assert s.reg1 == 2
    assert s.euler_ok
    assert s.to_dict()["t"] == [2, 3, "-inf"]


@pytest.mark.parametrize(
    "gens",
    [
        lambda x, y, z: [x, y, z],
        lambda x, y, z: [x**2, y**2, z**2],
        lambda x, y, z: [x * y, y * z, x * z],
        lambda x, y, z: [x**2, x * y, y**3],
    ],
)
def test_koszul_matches_betti(R3, gens):
    M = quotient_ring(Ideal(R3, gens(*R3.gens())))
    B = betti_table(minimal_free_resolution(M))
    s = koszul_summary(M)
    for i in range(4):
        for j in range(0, s.bound_used + 1):
            assert s.ranks.get((i, j), 0) == B[(i, j)]
    assert s.reg1 == regularity(M)


def test_t_invariants(R2):
    x, y = R2.gens()
    assert t_invariants(quotient_ring(Ideal(R2, [x**2, y**3]))) == [0, 3, 5]


def test_zero_module(R2):
    F = FreeModule.cyclic(R2)
    Z = Cokernel(F, Ideal(R2, [R2.gens()[0] ** 0]).vectors())
    s = koszul_summary(Z)
    assert s.reg1 == NEG_INF
    assert s.ranks == {}


def test_nonstandard_ring_rejected():
    A = nonstandard_ring([1, 2])
    with pytest.raises(ParameterError):
        KoszulComplex(Cokernel(FreeModule.cyclic(A), []))
    with pytest.raises(ParameterError):
        reg_via_duality(Cokernel(FreeModule.cyclic(A), []))


def test_bad_index(R2):
    with pytest.raises(ParameterError):
        koszul_homology(Ideal(R2, R2.gens()), -1, 0)


def test_duality_example():
    R = PolynomialRing(QQ, ["x"])
    (x,) = R.gens()
    report = reg_via_duality(quotient_ring(Ideal(R, [x**2])))
    assert report.reg_via_duality == 1
    assert report.ext_bidegrees == {(1, -1): 1}
    assert report.local_cohomology() == {(0, 1): 1}
    assert report.windows == {1: (-1, -1)}


@pytest.mark.parametrize(
    "gens, expected",
    [
        (lambda x, y: [x, y], 0),
        (lambda x, y: [x**2, x * y], 1),
        (lambda x, y: [x**2, y**3], 3),
        (lambda x, y: [x**3, x**2 * y, y**3], 3),
    ],
)
def test_duality_matches_resolution(R2, gens, expected):
    M = quotient_ring(Ideal(R2, gens(*R2.gens())))
    assert reg_via_duality(M).reg_via_duality == expected == regularity(M)


def test_duality_of_ideal(twisted_cubic):
    assert reg_via_duality(twisted_cubic).reg_via_duality == 2


def test_prime_field_koszul():
    R = PolynomialRing(Fp(32003), ["x", "y"])
    x, y = R.gens()
    assert koszul_summary(quotient_ring(Ideal(R, [x**2, y**2]))).reg1 == 2


def test_polynomial_ring_itself(R2):
    S = Cokernel(FreeModule.cyclic(R2), [])
    assert koszul_homology(S, 0, 0) == 1
    for j in range(4):
        assert koszul_homology(S, 1, j) == 0
    s = koszul_summary(S)
    assert s.t == [0, NEG_INF, NEG_INF]
    assert s.reg1 == 0
    report = reg_via_duality(S)
    assert report.reg_via_duality == 0
    assert report.ext_bidegrees == {(0, 2): 1}
    assert report.local_cohomology() == {(2, -2): 1}


@pytest.mark.parametrize("a", [-3, -2, -1, 0, 1, 2, 3])
def test_duality_shift_law(R2, a):
    x, y = R2.gens()
    assert reg_via_duality(shift_module(Cokernel(FreeModule.cyclic(R2), []), a)).reg_via_duality == a
    M = quotient_ring(Ideal(R2, [x**2, x * y]))
    assert reg_via_duality(shift_module(M, a)).reg_via_duality == 1 + a
