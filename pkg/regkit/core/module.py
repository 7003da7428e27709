#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Twisted graded free modules
===========================

A vector of ``F = S(-a_1) + ... + S(-a_r)`` is stored sparsely as a map
``(k, monomial) -> coefficient``. The basis vector ``e_k`` has degree
``a_k``, its twist.

.. autosummary::
    :toctree: generated/

    FreeModule
    ModuleVector
    multidegree_of
"""

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .._typing import Coefficient, Multidegree, Term
from ..util.exceptions import ParameterError, RingMismatchError
from ..util.utils import valid_multidegree
from .order import DEGREVLEX, MonomialOrder
from .poly import Polynomial
from .ring import PolynomialRing, degree_add, degree_sub, monomial_mul

__all__ = ["FreeModule", "ModuleVector", "multidegree_of", "vector_degree"]


class FreeModule(object):
    """A graded free module with prescribed twists.

    Parameters
    ----------
    ring : PolynomialRing
    twists : sequence of multidegrees
        ``twists[k]`` is the degree of the basis vector ``e_k``. The module
        ``S(-a)`` has the single twist ``a``.
    """

    def __init__(self, ring: PolynomialRing, twists: Sequence[Any]):
        self.ring = ring
        self.twists: Tuple[Multidegree, ...] = tuple(
            valid_multidegree(t, ring.arity) for t in twists
        )
        self.rank = len(self.twists)

    @classmethod
    def cyclic(cls, ring: PolynomialRing, twist: Optional[Any] = None) -> "FreeModule":
        return cls(ring, [twist if twist is not None else ring.zero_degree])

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.twists == other.twists
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.twists))

    def __repr__(self) -> str:
        return f"FreeModule({self.ring}, {list(self.twists)})"

    def shift(self, a: Any) -> "FreeModule":
        """``F(-a)``: every twist increased by ``a``."""
        a = valid_multidegree(a, self.ring.arity)
        return FreeModule(self.ring, [degree_add(t, a) for t in self.twists])

    def direct_sum(self, other: "FreeModule") -> "FreeModule":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} and {other.ring} differ")
        return FreeModule(self.ring, self.twists + other.twists)

    def basis(self) -> List["ModuleVector"]:
        one = self.ring.one()
        return [ModuleVector(self, {(k, one): 1}) for k in range(self.rank)]

    def zero(self) -> "ModuleVector":
        return ModuleVector(self, {})

    def term_degree(self, t: Term) -> Multidegree:
        return degree_add(self.ring.monomial_degree(t[1]), self.twists[t[0]])


class ModuleVector(object):
    """An element of a `FreeModule`.

    Parameters
    ----------
    module : FreeModule
    terms : mapping ``(k, monomial) -> coefficient``
    """

    __slots__ = ("module", "terms")

    def __init__(self, module: FreeModule, terms: Optional[Dict[Term, Any]] = None):
        self.module = module
        canon = module.ring.field.canon
        clean: Dict[Term, Coefficient] = {}
        for (k, m), c in (terms or {}).items():
            if not 0 <= k < module.rank or len(m) != module.ring.ngens:
                raise RingMismatchError(f"term {(k, m)} does not belong to {module}")
            c = canon(c)
            if c != 0:
                clean[(k, tuple(m))] = c
        self.terms: Dict[Term, Coefficient] = clean

    @classmethod
    def _raw(cls, module: FreeModule, terms: Dict[Term, Coefficient]) -> "ModuleVector":
        v = cls.__new__(cls)
        v.module = module
        v.terms = terms
        return v

    @classmethod
    def from_entries(cls, module: FreeModule, entries: Sequence[Polynomial]) -> "ModuleVector":
        if len(entries) != module.rank:
            raise ParameterError(f"{len(entries)} entries for a module of rank {module.rank}")
        terms: Dict[Term, Coefficient] = {}
        for k, f in enumerate(entries):
            if f.ring != module.ring:
                raise RingMismatchError(f"entry {f} does not belong to {module.ring}")
            for m, c in f.terms.items():
                terms[(k, m)] = c
        return cls._raw(module, terms)

    def entries(self) -> List[Polynomial]:
        ring = self.module.ring
        rows: List[Dict] = [{} for _ in range(self.module.rank)]
        for (k, m), c in self.terms.items():
            rows[k][m] = c
        return [Polynomial._raw(ring, r) for r in rows]

    def entry(self, k: int) -> Polynomial:
        return Polynomial._raw(
            self.module.ring, {m: c for (j, m), c in self.terms.items() if j == k}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "ModuleVector") -> None:
        if self.module != other.module:
            raise RingMismatchError("vectors live in different free modules")

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector._raw(
            self.module, add_terms(self.module.ring.field, self.terms, other.terms)
        )

    def __neg__(self) -> "ModuleVector":
        F = self.module.ring.field
        return ModuleVector._raw(self.module, {t: F.neg(c) for t, c in self.terms.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def scale(self, f: Any) -> "ModuleVector":
        """Multiply by a polynomial or a field element."""
        if isinstance(f, Polynomial):
            F = self.module.ring.field
            out: Dict[Term, Coefficient] = {}
            for m, c in f.terms.items():
                out = add_terms(
                    F, out, {(k, monomial_mul(a, m)): F.mul(b, c) for (k, a), b in self.terms.items()}
                )
            return ModuleVector._raw(self.module, out)
        return ModuleVector.from_entries(self.module, [e.scale(f) for e in self.entries()])

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, ModuleVector)
            and self.module == other.module
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.module, frozenset(self.terms.items())))

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> Tuple[Term, Coefficient]:
        if not self.terms:
            raise ParameterError("the zero vector has no leading term")
        key = order.term_key(self.module.ring, self.module.twists)
        t = max(self.terms, key=key)
        return t, self.terms[t]

    def degree(self) -> Optional[Multidegree]:
        return multidegree_of(self, self.module)

    def __str__(self) -> str:
        if self.module.rank == 1:
            return str(self.entry(0))
        return "[" + ", ".join(str(e) for e in self.entries()) + "]"

    def __repr__(self) -> str:
        return f"ModuleVector({self})"


def add_terms(field, a: Dict, b: Dict, scale: Coefficient = 1) -> Dict:
    """``a + scale * b`` on sparse term maps, dropping zeros."""
    out = dict(a)
    for t, c in b.items():
        s = field.add(out.get(t, 0), field.mul(scale, c) if scale != 1 else c)
        if s == 0:
            out.pop(t, None)
        else:
            out[t] = s
    return out


def vector_degree(ring: PolynomialRing, twists: Sequence[Multidegree], terms: Iterable[Term]):
    """Common degree of the given terms, or None if they disagree."""
    degree = None
    for k, m in terms:
        d = degree_add(ring.monomial_degree(m), twists[k])
        if degree is None:
            degree = d
        elif d != degree:
            return None
    return degree


def multidegree_of(v: ModuleVector, F: Optional[FreeModule] = None) -> Optional[Multidegree]:
    """Multidegree of a homogeneous module vector.

    Parameters
    ----------
    v : ModuleVector
        A nonzero vector
    F : FreeModule, optional
        Ambient module; defaults to ``v.module``

    Returns
    -------
    degree : tuple or None
        ``D`` such that every nonzero entry ``k`` is homogeneous of degree
        ``D - twist_k``; ``None`` when ``v`` is inhomogeneous.

    Raises
    ------
    ParameterError
        If ``v`` is zero

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> F = FreeModule(R, [1, 1])
    >>> multidegree_of(ModuleVector.from_entries(F, [x, y]))
    (2,)
    """
    if F is None:
        F = v.module
    elif F != v.module:
        raise RingMismatchError("vector does not belong to the given free module")
    if not v.terms:
        raise ParameterError("the zero vector has no degree")
    return vector_degree(F.ring, F.twists, v.terms)


def entry_degree(F: FreeModule, D: Multidegree, k: int) -> Multidegree:
    """Degree an entry ``k`` must have in a vector of degree ``D``."""
    return degree_sub(D, F.twists[k])
