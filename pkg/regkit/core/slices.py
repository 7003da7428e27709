#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Degree slices
=============

The degree-``D`` part of a graded free module is finite dimensional; these
helpers enumerate it and span the degree-``D`` part of a submodule by
monomial multiples of its generators. They give linear-algebra answers that
do not depend on any Groebner computation.

.. autosummary::
    :toctree: generated/

    slice_basis
    slice_rows
    slice_span
    quotient_dimension
"""

from typing import Any, List, Sequence

from .._typing import Multidegree, Term
from ..util.exceptions import ParameterError
from ..util.utils import valid_multidegree
from .linalg import EchelonBasis, rank
from .module import FreeModule, ModuleVector
from .ring import degree_sub, monomial_mul

__all__ = ["slice_basis", "slice_rows", "slice_span", "quotient_dimension"]


def slice_basis(F: FreeModule, D: Any) -> List[Term]:
    """Monomial basis ``(k, m)`` of the degree-``D`` part of ``F``."""
    D = valid_multidegree(D, F.ring.arity)
    out: List[Term] = []
    for k, twist in enumerate(F.twists):
        out.extend((k, m) for m in F.ring.monomials_of_degree(degree_sub(D, twist)))
    return out


def slice_rows(gens: Sequence[ModuleVector], D: Any) -> List[dict]:
    """Monomial multiples of homogeneous ``gens`` landing in degree ``D``."""
    rows = []
    for g in gens:
        if not g.terms:
            continue
        F = g.module
        e = degree_sub(valid_multidegree(D, F.ring.arity), g.degree())
        if min(e) < 0:
            continue
        for q in F.ring.monomials_of_degree(e):
            rows.append({(k, monomial_mul(m, q)): c for (k, m), c in g.terms.items()})
    return rows


def slice_span(gens: Sequence[ModuleVector], D: Any) -> EchelonBasis:
    """Echelon basis of the degree-``D`` part of the submodule ``<gens>``."""
    if not gens:
        raise ParameterError("slice_span needs at least one generator")
    basis = EchelonBasis(gens[0].module.ring.field)
    for row in slice_rows(gens, D):
        basis.add(row)
    return basis


def quotient_dimension(F: FreeModule, gens: Sequence[ModuleVector], D: Multidegree) -> int:
    """``dim (F / <gens>)_D`` by degree-slice linear algebra."""
    total = len(slice_basis(F, D))
    if not total:
        return 0
    return total - rank(slice_rows(gens, D), F.ring.field)
