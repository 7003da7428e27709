#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Homogeneous ideals
==================

.. autosummary::
    :toctree: generated/

    Ideal
"""

import itertools
import warnings
from typing import Iterable, List, Optional, Sequence

from .._typing import Multidegree
from ..util.exceptions import InhomogeneousError, ParameterError, RegkitWarning, RingMismatchError
from ..util.utils import valid_int
from .groebner import GroebnerBasis, buchberger, minimalize_generators, normal_form
from .module import FreeModule, ModuleVector
from .order import DEGREVLEX, MonomialOrder
from .poly import Polynomial
from .ring import PolynomialRing

__all__ = ["Ideal"]


class Ideal(object):
    """A homogeneous ideal given by generators.

    Generators are stored primitive (integer content 1 over QQ, monic over
    a prime field) with zeros removed; `minimal` returns a minimal
    homogeneous generating set.

    Parameters
    ----------
    ring : PolynomialRing
    generators : iterable of Polynomial

    Raises
    ------
    InhomogeneousError
        If a generator is not homogeneous

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> I = Ideal(R, [x, x, y])
    >>> [str(f) for f in I.minimal().generators]
    ['x', 'y']
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial] = ()):
        gens: List[Polynomial] = []
        for f in generators:
            if f.ring != ring:
                raise RingMismatchError(f"{f} does not belong to {ring}")
            if not f.is_homogeneous():
                raise InhomogeneousError(f"ideal generator {f} is not homogeneous")
            if f:
                gens.append(f.primitive())
        self.ring = ring
        self.generators: List[Polynomial] = gens
        self._minimal: Optional["Ideal"] = None

    def __repr__(self) -> str:
        return f"Ideal({self}, {self.ring})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.generators) + ")"

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        """Equality as ideals, by comparing reduced Groebner bases."""
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return False
        return [g.terms for g in self.groebner()] == [g.terms for g in other.groebner()]

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.minimal().generators)))

    @property
    def module(self) -> FreeModule:
        return FreeModule.cyclic(self.ring)

    def vectors(self) -> List[ModuleVector]:
        F = self.module
        return [ModuleVector._raw(F, {(0, m): c for m, c in f.terms.items()}) for f in self.generators]

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(f.is_constant() for f in self.generators)

    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.generators)

    def minimal(self) -> "Ideal":
        """The same ideal with a minimal homogeneous generating set."""
        if self._minimal is None:
            kept = minimalize_generators(self.generators, module=self.module)
            out = Ideal(self.ring, [v.entry(0) for v in kept])
            out._minimal = out
            self._minimal = out
        return self._minimal

    def is_minimal(self) -> bool:
        return len(self.minimal()) == len(self)

    def degrees(self) -> List[Multidegree]:
        """Degrees of the minimal generators, sorted."""
        return sorted(f.degree() for f in self.minimal().generators)

    def generator_degrees(self) -> List[int]:
        return sorted({sum(d) for d in self.degrees()})

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) == 1

    def groebner(self, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
        return buchberger(self.vectors(), order, module=self.module)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner()).is_zero()

    # ----- constructions -----
    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators).minimal()

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(
            self.ring, [f * g for f in self.generators for g in other.generators]
        ).minimal()

    def power(self, v: int) -> "Ideal":
        """``I^v`` from products of ``v``-fold generator combinations.

        ``v = 0`` returns the unit ideal with a warning.
        """
        v = valid_int(v, name="v", minimum=0)
        if v == 0:
            warnings.warn("I^0 is the unit ideal", RegkitWarning, stacklevel=2)
            return Ideal(self.ring, [Polynomial.constant(self.ring, 1)])
        gens = self.minimal().generators
        products = []
        for combo in itertools.combinations_with_replacement(range(len(gens)), v):
            f = gens[combo[0]]
            for i in combo[1:]:
                f = f * gens[i]
            products.append(f)
        return Ideal(self.ring, products).minimal()

    def _check(self, other: "Ideal") -> None:
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")

    @classmethod
    def from_strings(cls, ring: PolynomialRing, texts: Sequence[str]) -> "Ideal":
        from ..script.parser import parse_polynomial

        return cls(ring, [parse_polynomial(t, ring) for t in texts])

    def change_field(self, field) -> "Ideal":
        ring = self.ring.change_field(field)
        return Ideal(ring, [f.change_ring(ring) for f in self.generators])

    def require_equigenerated(self) -> int:
        degs = self.generator_degrees()
        if len(degs) != 1 or self.ring.arity != 1:
            raise ParameterError(f"ideal {self} is not generated in a single degree")
        return degs[0]
