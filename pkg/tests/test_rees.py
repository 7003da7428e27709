#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest

from regkit.asymptotics import nonstandard_ring
from regkit.core.field import QQ
from regkit.core.ideal import Ideal
from regkit.core.ring import PolynomialRing
from regkit.rees import (
    BigradedBetti,
    bigraded_resolution,
    linear_powers_test,
    reg_bidirectional,
    rees_degreewise_check,
    rees_ideal,
    strand_regularities,
)
from regkit.resolve import quotient_ring
from regkit.util.exceptions import ParameterError, RegkitWarning
from regkit.util.utils import NEG_INF


@pytest.fixture(scope="module")
def maximal(R2):
    return Ideal(R2, R2.gens())


def test_rees_of_maximal_ideal(maximal):
    P = rees_ideal(maximal)
    assert P.normalized
    assert P.d == 1
    assert [str(g) for g in P.generators] == ["y*Y1 - x*Y2"]
    assert P.ring.degrees == ((1, 0), (1, 0), (0, 1), (0, 1))
    assert (P.x_count, P.y_count) == (2, 2)
    assert P.to_dict()["generators"] == ["y*Y1 - x*Y2"]


def test_rees_not_normalized(R2):
    x, y = R2.gens()
    P = rees_ideal(Ideal(R2, [x**2, y**3]))
    assert not P.normalized
    assert P.d is None
    assert [str(g) for g in P.generators] == ["y^3*Y1 - x^2*Y2"]
    assert P.ring.degrees[2:] == ((2, 1), (3, 1))


def test_rees_forced_normalization(R2):
    x, y = R2.gens()
    with pytest.raises(ParameterError):
        rees_ideal(Ideal(R2, [x**2, y**3]), normalized=True)


def test_rees_rejects_zero_ideal(R2):
    with pytest.raises(ParameterError):
        rees_ideal(Ideal(R2, []))


def test_rees_rejects_bigraded_ring():
    A = nonstandard_ring([1, 1])
    with pytest.raises(ParameterError):
        rees_ideal(Ideal(A, A.gens()))


def test_rees_reminimalizes(R2):
    x, y = R2.gens()
    with pytest.warns(RegkitWarning):
        P = rees_ideal(Ideal(R2, [x, y, x + y]))
    assert P.y_count == 2


def test_rees_variable_names_avoid_clashes():
    R = PolynomialRing(QQ, ["Y1", "Y2"])
    P = rees_ideal(Ideal(R, R.gens()))
    assert P.ring.names[2:] == ("Y_1", "Y_2")


def test_rees_degreewise_check(maximal):
    dims = rees_degreewise_check(rees_ideal(maximal), i_max=2, v_max=2)
    assert dims[(0, 0)] == 1
    assert dims[(0, 1)] == 2
    assert dims[(1, 1)] == 3
    assert dims[(2, 0)] == 3


def test_rees_degreewise_check_not_normalized(R2):
    x, y = R2.gens()
    P = rees_ideal(Ideal(R2, [x**2, y**3]))
    dims = rees_degreewise_check(P, i_max=5, v_max=2)
    # every quintic lies in (x^2, y^3)
    assert dims[(5, 1)] == 6
    assert dims[(1, 1)] == 0


def test_bigraded_resolution(maximal):
    res, table = bigraded_resolution(rees_ideal(maximal))
    assert res.length == 1
    assert table.v == [0, 1]
    assert table.w == [0, 1]
    assert table.entries == {(0, (0, 0)): 1, (1, (1, 1)): 1}
    assert reg_bidirectional(table, 2, 2) == (0, 0)


def test_bigraded_resolution_rejects_standard_module(maximal):
    with pytest.raises(ParameterError):
        bigraded_resolution(quotient_ring(maximal))


def test_reg_bidirectional_bounds():
    table = BigradedBetti({}, [0, 3, 5], [0, 1, NEG_INF])
    assert reg_bidirectional(table, 2, 2) == (3, 0)
    assert reg_bidirectional(table, 0, 0) == (0, 0)


def test_linear_powers_maximal(maximal):
    report = linear_powers_test(maximal, budget=3, n_jobs=1)
    assert report.linear_powers
    assert not report.inconclusive
    assert (report.reg10, report.reg01) == (0, 0)
    assert report.sequence == [(1, 1), (2, 2), (3, 3)]
    assert report.witness_v == 1
    assert report.linear == {1: True, 2: True, 3: True}
    assert report.to_dict()["bound"] == [[1, 1], [2, 2], [3, 3]]


def test_linear_powers_failure(R2):
    I = Ideal.from_strings(R2, ["x^4", "x^3*y", "x*y^3", "y^4"])
    report = linear_powers_test(I, budget=2, n_jobs=1)
    assert report.reg10 == 1
    assert not report.linear_powers
    assert report.d == 4
    assert report.sequence == [(1, 5), (2, 8)]
    assert report.witness_v == 1
    assert report.linear == {1: False, 2: True}


def test_linear_powers_requires_equigenerated(R2):
    x, y = R2.gens()
    with pytest.raises(ParameterError):
        linear_powers_test(Ideal(R2, [x**2, y**3]))


def test_linear_powers_rejects_module(maximal):
    with pytest.raises(ParameterError):
        linear_powers_test(maximal, M=quotient_ring(maximal))


def test_strand_regularities(R2):
    x, y = R2.gens()
    assert strand_regularities(Ideal(R2, [x**2, x * y]), 3, n_jobs=1) == [(1, 0), (2, 0), (3, 0)]


@pytest.mark.parametrize(
    "gens, d",
    [
        (lambda x, y: [x, y], 1),
        (lambda x, y: [x**2, x * y, y**2], 2),
        (lambda x, y: Ideal(x.ring, [x, y]).power(2).generators, 2),
    ],
)
def test_linear_powers_criterion(R2, gens, d):
    I = Ideal(R2, gens(*R2.gens()))
    report = linear_powers_test(I, budget=4, n_jobs=1)
    assert report.reg10 == 0
    assert report.d == d
    assert report.sequence == [(v, v * d) for v in range(1, 5)]
    assert report.witness_v == 1
    assert all(report.linear.values())
    dims = rees_degreewise_check(rees_ideal(I), i_max=6, v_max=4)
    assert len(dims) == 35
    assert dims[(0, 1)] == len(I.minimal())


def test_rees_of_square_of_maximal_ideal(R2):
    P = rees_ideal(Ideal.from_strings(R2, ["x^2", "x*y", "y^2"]))
    degrees = sorted(g.degree() for g in P.generators)
    assert degrees == [(0, 2), (1, 1), (1, 1)]
