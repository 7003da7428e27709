#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regkit.asymptotics import (
    LinearLaw,
    NotStabilized,
    PrimeFactor,
    VanishingLaw,
    fit_linear_law,
    ideal_power,
    koszul_power_laws,
    nonstandard_ring,
    power_module,
    prime_filtration,
    reg_power_sequence,
    rho,
    rho_from_filtration,
    rho_initial_invariance,
    rho_linear_law_monomial,
    rho_table,
)
from regkit.core.ideal import Ideal
from regkit.core.module import FreeModule, ModuleVector
from regkit.core.poly import Polynomial
from regkit.resolve import Cokernel, quotient_ring, regularity
from regkit.util.exceptions import CrossCheckError, ParameterError, RegkitWarning
from regkit.util.utils import NEG_INF


@pytest.fixture(scope="module")
def A23():
    return nonstandard_ring([2, 3])


def _monomial_module(A, monomials):
    F = FreeModule.cyclic(A)
    return Cokernel(F, [ModuleVector.from_entries(F, [Polynomial.monomial(A, m)]) for m in monomials])


def test_nonstandard_ring(A23):
    assert A23.degrees == ((2, 1), (3, 1))
    assert str(A23) == "QQ[Y1,Y2] deg Y1 = (2,1) deg Y2 = (3,1)"


def test_nonstandard_ring_negative_degree():
    with pytest.raises(ParameterError):
        nonstandard_ring([1, -1])


def test_rho_free(A23):
    assert rho(Cokernel(FreeModule.cyclic(A23), []), 4) == 12


def test_rho_below_generators(A23):
    F = FreeModule(A23, [(0, 2)])
    assert rho(Cokernel(F, []), 1) == NEG_INF
    assert rho(Cokernel(F, []), 2) == 0


def test_rho_rejects_standard_ring(R2):
    with pytest.raises(ParameterError):
        rho(quotient_ring(Ideal(R2, [R2.gens()[0]])), 1)


def test_rho_table_kill_top_variable(A23):
    table = rho_table(_monomial_module(A23, [(0, 1)]), 4)
    assert table.values == {v: 2 * v for v in range(5)}
    assert table.to_dict() == {"0": 0, "1": 2, "2": 4, "3": 6, "4": 8}


def test_rho_table_product(A23):
    N = _monomial_module(A23, [(1, 1)])
    table = rho_table(N, 4)
    assert table.values == {0: 0, 1: 3, 2: 6, 3: 9, 4: 12}
    for v in range(5):
        assert rho_from_filtration(N, v) == table.values[v]


def test_prime_filtration_product(A23):
    factors = prime_filtration(_monomial_module(A23, [(1, 1)]))
    assert factors == [
        PrimeFactor((1,), (3, 1), 0, (0, 1)),
        PrimeFactor((0,), (0, 0), 0, (0, 0)),
    ]


def test_prime_filtration_rejects_binomials():
    A = nonstandard_ring([1, 1, 1])
    Y1, Y2, Y3 = A.gens()
    F = FreeModule.cyclic(A)
    with pytest.raises(ParameterError, match="not a monomial"):
        prime_filtration(Cokernel(F, [ModuleVector.from_entries(F, [Y1**2 - Y2 * Y3])]))


def test_rho_linear_law_factor(A23):
    law = rho_linear_law_monomial(PrimeFactor((1,), (5, 1)), A23)
    assert law == LinearLaw(3, 2, 1, None, certified=True)
    assert str(law) == "3*v + 2 (v >= 1)"
    assert law.value(4) == 14
    with pytest.raises(ParameterError):
        law.value(0)


def test_rho_linear_law_empty_support(A23):
    law = rho_linear_law_monomial(PrimeFactor((), (4, 2)), A23)
    assert isinstance(law, VanishingLaw)
    assert (law.v_last, law.value) == (2, 4)


def test_rho_linear_law_from_module(A23):
    law = rho_linear_law_monomial(_monomial_module(A23, [(0, 1)]))
    assert (law.delta, law.c, law.v_start) == (2, 0, 0)


def test_rho_linear_law_needs_ring():
    with pytest.raises(ParameterError):
        rho_linear_law_monomial(PrimeFactor((0,), (0, 0)))


def test_rho_linear_law_rejects_non_prime(A23):
    with pytest.raises(ParameterError):
        rho_linear_law_monomial(_monomial_module(A23, [(2, 0)]))


def test_rho_initial_invariance():
    A = nonstandard_ring([1, 1, 1])
    Y1, Y2, Y3 = A.gens()
    F = FreeModule.cyclic(A)
    report = rho_initial_invariance(F, [ModuleVector.from_entries(F, [Y1**2 - Y2 * Y3])], v_max=4)
    assert report.holds
    assert report.verify()
    assert report.original.values[0] == 0


@given(
    st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda m: sum(m) > 0),
        max_size=3,
    )
)
def test_rho_matches_filtration(monomials):
    A = nonstandard_ring([1, 2])
    N = _monomial_module(A, monomials)
    for v in range(4):
        assert rho(N, v) == rho_from_filtration(N, v)


A112 = nonstandard_ring([1, 1, 2])


@st.composite
def bihomogeneous(draw):
    D = draw(st.sampled_from([(1, 1), (2, 1), (2, 2), (3, 2)]))
    ms = A112.monomials_of_degree(D)
    coeffs = draw(st.lists(st.integers(-2, 2), min_size=len(ms), max_size=len(ms)).filter(any))
    return sum((c * Polynomial.monomial(A112, m) for c, m in zip(coeffs, ms) if c), Polynomial(A112))


@settings(max_examples=20)
@given(st.lists(bihomogeneous(), min_size=1, max_size=2))
def test_rho_initial_invariance_random(U):
    F = FreeModule.cyclic(A112)
    report = rho_initial_invariance(F, [ModuleVector.from_entries(F, [f]) for f in U], v_max=8)
    assert report.holds, (report.original.values, report.initial.values)


def test_ideal_power(R2):
    x, y = R2.gens()
    assert str(ideal_power(Ideal(R2, [x, y]), 2)) == "(x^2, x*y, y^2)"


def test_power_module_of_ring(R2):
    x, y = R2.gens()
    P = power_module(Ideal(R2, [x, y]), 2)
    assert P.ambient.twists == ((2,), (2,), (2,))
    assert regularity(P) == 2


def test_power_module_over_quotient(R2):
    x, y = R2.gens()
    M = quotient_ring(Ideal(R2, [x]))
    assert regularity(power_module(Ideal(R2, [x, y]), 1, M)) == 1


def test_power_module_zero(R2):
    x, _ = R2.gens()
    M = quotient_ring(Ideal(R2, [x]))
    with pytest.warns(RegkitWarning):
        P = power_module(Ideal(R2, [x]), 2, M)
    assert P.is_zero()


@pytest.mark.parametrize(
    "gens, expected",
    [
        ("x^2, y^3", [(1, 4), (2, 7), (3, 10), (4, 13)]),
        ("x, y", [(1, 1), (2, 2), (3, 3), (4, 4)]),
        ("x^2, x*y", [(1, 2), (2, 4), (3, 6), (4, 8)]),
    ],
)
def test_reg_power_sequence(R2, gens, expected):
    I = Ideal.from_strings(R2, gens.split(", "))
    assert reg_power_sequence(I, v_max=4) == expected


def test_reg_power_sequence_over_quotient(R2):
    x, y = R2.gens()
    M = quotient_ring(Ideal(R2, [x]))
    assert reg_power_sequence(Ideal(R2, [x, y]), M, v_max=3) == [(1, 1), (2, 2), (3, 3)]


def test_reg_power_sequence_vanishing(R2):
    x, _ = R2.gens()
    M = quotient_ring(Ideal(R2, [x]))
    assert reg_power_sequence(Ideal(R2, [x]), M, v_max=2) == [(1, NEG_INF), (2, NEG_INF)]


def test_reg_power_sequence_jump(R2):
    I = Ideal.from_strings(R2, ["x^4", "x^3*y", "x*y^3", "y^4"])
    assert reg_power_sequence(I, v_max=2, n_jobs=1) == [(1, 5), (2, 8)]


def test_reg_power_sequence_bad_budget(R2):
    with pytest.raises(ParameterError):
        reg_power_sequence(Ideal(R2, R2.gens()), v_max=0)


def test_fit_linear_law():
    law = fit_linear_law([(1, 5), (2, 7), (3, 10), (4, 13)], {2, 3})
    assert law == LinearLaw(3, 1, 2, 4, False)
    assert law.value(6) == 19


def test_fit_linear_law_unsorted_input():
    law = fit_linear_law([(3, 6), (1, 2), (2, 4)], [2])
    assert (law.delta, law.c, law.v_start) == (2, 0, 1)


def test_fit_linear_law_too_short():
    assert isinstance(fit_linear_law([(1, 2), (2, 4)], [2]), NotStabilized)
    assert isinstance(fit_linear_law([], [2]), NotStabilized)


def test_fit_linear_law_bad_slope():
    with pytest.raises(CrossCheckError):
        fit_linear_law([(1, 5), (2, 10), (3, 15)], {2, 3})


def test_fit_linear_law_vanishing():
    law = fit_linear_law([(1, 3), (2, NEG_INF), (3, NEG_INF), (4, NEG_INF)], [1])
    assert law == VanishingLaw(1, 3)
    assert law.to_dict() == {"kind": "vanishing", "v_last": 1, "value": 3, "certified": False}


def test_fit_linear_law_short_vanishing_tail():
    law = fit_linear_law([(1, 3), (2, 4), (3, NEG_INF)], [1])
    assert isinstance(law, NotStabilized)
    assert "-inf" in law.reason


def test_koszul_power_laws(R2):
    laws = koszul_power_laws(Ideal(R2, R2.gens()), v_max=4, n_jobs=1)
    assert laws.t[1] == [1, 2, NEG_INF]
    assert (laws.laws[0].delta, laws.laws[0].c) == (1, 0)
    assert (laws.laws[1].delta, laws.laws[1].c) == (1, 1)
    assert laws.laws[2] == VanishingLaw(None)
    assert laws.to_dict()["laws"]["2"]["value"] == "-inf"
