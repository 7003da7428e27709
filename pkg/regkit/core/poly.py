#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Polynomials
===========

.. autosummary::
    :toctree: generated/

    Polynomial
    poly_arith
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .._typing import Coefficient, Monomial, Multidegree
from ..util.exceptions import (
    InhomogeneousError,
    ParameterError,
    RingMismatchError,
)
from .field import FieldValue
from .order import DEGREVLEX, MonomialOrder
from .ring import PolynomialRing, monomial_mul

__all__ = ["Polynomial", "poly_arith"]

Scalar = Union[int, Fraction, FieldValue]


class Polynomial(object):
    """An immutable polynomial with exact coefficients.

    Parameters
    ----------
    ring : PolynomialRing
    terms : mapping Monomial -> coefficient
        Raw coefficients; they are canonicalized and zero terms are dropped.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Optional[Mapping[Monomial, Any]] = None):
        self.ring = ring
        clean: Dict[Monomial, Coefficient] = {}
        canon = ring.field.canon
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ring.ngens:
                raise RingMismatchError(f"monomial {m} does not belong to {ring}")
            c = canon(c)
            if c != 0:
                clean[m] = c
        self.terms: Dict[Monomial, Coefficient] = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, ring: PolynomialRing, terms: Dict[Monomial, Coefficient]) -> "Polynomial":
        # Trusted constructor: canonical coefficients, no zeros
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, ring: PolynomialRing, c: Any) -> "Polynomial":
        return cls(ring, {ring.one(): c})

    @classmethod
    def monomial(cls, ring: PolynomialRing, m: Monomial, c: Any = 1) -> "Polynomial":
        return cls(ring, {m: c})

    # ----- basic predicates -----
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # ----- grading -----
    def degrees(self) -> List[Multidegree]:
        return sorted({self.ring.monomial_degree(m) for m in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Multidegree:
        """Multidegree of a nonzero homogeneous polynomial.

        Raises
        ------
        ParameterError
            For the zero polynomial
        InhomogeneousError
            If the terms have several multidegrees
        """
        if not self.terms:
            raise ParameterError("the zero polynomial has no degree")
        degs = self.degrees()
        if len(degs) > 1:
            raise InhomogeneousError(f"{self} is not homogeneous")
        return degs[0]

    def total_degree(self) -> int:
        if not self.terms:
            raise ParameterError("the zero polynomial has no degree")
        return max(sum(self.ring.monomial_degree(m)) for m in self.terms)

    # ----- order-dependent -----
    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> List[Tuple[Monomial, Coefficient]]:
        key = order.monomial_key(self.ring)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> Tuple[Monomial, Coefficient]:
        if not self.terms:
            raise ParameterError("the zero polynomial has no leading term")
        key = order.monomial_key(self.ring)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def primitive(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        """Integer coefficients with content 1 and positive leading coefficient (QQ).

        Over a prime field this is `monic`.
        """
        if not self.terms or self.ring.field.is_prime_field:
            return self.monic(order)
        coeffs = [c for _, c in self.sorted_terms(order)]
        return self.scale(self.ring.field.primitive_scale(coeffs))

    # ----- arithmetic -----
    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} and {other.ring} differ")

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, FieldValue):
            if other.field != self.ring.field:
                raise RingMismatchError(f"{other!r} is not in {self.ring.field}")
            other = other.value
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, 0), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        F = self.ring.field
        return Polynomial._raw(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Any) -> "Polynomial":
        F = self.ring.field
        if isinstance(c, FieldValue):
            c = c.value
        c = F.canon(c)
        if c == 0:
            return Polynomial._raw(self.ring, {})
        return Polynomial._raw(self.ring, {m: F.mul(a, c) for m, a in self.terms.items()})

    def mul_term(self, m: Monomial, c: Coefficient) -> "Polynomial":
        F = self.ring.field
        return Polynomial._raw(
            self.ring, {monomial_mul(a, m): F.mul(b, c) for a, b in self.terms.items()}
        )

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction, FieldValue)):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        F = self.ring.field
        out: Dict[Monomial, Coefficient] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = monomial_mul(a, b)
                s = F.add(out.get(m, 0), F.mul(ca, cb))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ParameterError(f"exponent {k!r} must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ----- identity -----
    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # ----- ring changes -----
    def substitute(self, images: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace variable ``i`` by ``images[i]``; other variables are kept.

        All images must live in one common target ring. Variables that are
        kept must exist in the target under the same name.
        """
        if not images:
            return self
        target = next(iter(images.values())).ring
        keep = {}
        for i, name in enumerate(self.ring.names):
            if i not in images:
                if name not in target.index:
                    raise RingMismatchError(f"variable {name} has no image in {target}")
                keep[i] = target.index[name]
        result = Polynomial(target)
        for m, c in self.terms.items():
            e = [0] * target.ngens
            for i, k in keep.items():
                e[k] += m[i]
            term = Polynomial(target, {tuple(e): c})
            for i, f in images.items():
                if m[i]:
                    term = term * f ** m[i]
            result = result + term
        return result

    def change_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Reinterpret the same exponents (by variable name) in another ring.

        Variables of the source ring that ``ring`` lacks are allowed as long
        as no term of ``self`` involves them.
        """
        if ring.names == self.ring.names:
            perm = {i: i for i in range(ring.ngens)}
        else:
            perm = {}
            for i, name in enumerate(self.ring.names):
                if name in ring.index:
                    perm[i] = ring.index[name]
                elif any(m[i] for m in self.terms):
                    raise RingMismatchError(f"variable '{name}' is missing from {ring}")
        terms: Dict[Monomial, Any] = {}
        for m, c in self.terms.items():
            e = [0] * ring.ngens
            for i, k in perm.items():
                e[k] = m[i]
            terms[tuple(e)] = c
        if ring.field != self.ring.field:
            return Polynomial(ring, terms)
        return Polynomial._raw(ring, terms)

    # ----- text -----
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        F = self.ring.field
        pieces: List[str] = []
        for m, c in self.sorted_terms(DEGREVLEX):
            mono = _monomial_text(self.ring.names, m)
            negative = not F.is_prime_field and c < 0
            mag = -c if negative else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{F.render(mag)}*{mono}"
            else:
                body = F.render(mag)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self}, {self.ring})"


def _monomial_text(names: Iterable[str], m: Monomial) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_arith(op: str, f: Polynomial, g: Union[Polynomial, Scalar]) -> Polynomial:
    """Exact polynomial arithmetic.

    Parameters
    ----------
    op : {'add', 'sub', 'mul', 'scale'}
    f : Polynomial
    g : Polynomial or scalar
        A scalar is required for ``'scale'``

    Raises
    ------
    RingMismatchError
        If ``f`` and ``g`` live in different rings
    ParameterError
        For an unknown operation
    """
    if op == "add":
        return f + f._coerce(g)
    if op == "sub":
        return f - f._coerce(g)
    if op == "mul":
        if isinstance(g, Polynomial):
            f._check(g)
        return f * g
    if op == "scale":
        if isinstance(g, Polynomial):
            raise ParameterError("scale expects a field element")
        return f.scale(g)
    raise ParameterError(f"unknown polynomial operation op={op!r}")
