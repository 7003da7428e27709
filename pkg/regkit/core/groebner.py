#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Groebner bases
==============

Buchberger's algorithm for graded submodules of twisted free modules, with
the normal selection strategy and Gebauer-Moeller pair elimination.

Basis
-----
.. autosummary::
    :toctree: generated/

    GroebnerBasis
    buchberger
    normal_form

Syzygies and elimination
------------------------
.. autosummary::
    :toctree: generated/

    SyzygyResult
    syzygies
    eliminate
    minimalize_generators
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from .._cache import cache
from .._typing import Coefficient, Multidegree, Term
from ..util.exceptions import (
    GroebnerError,
    InhomogeneousError,
    ParameterError,
    RingMismatchError,
)
from .field import FieldSpec
from .module import FreeModule, ModuleVector, add_terms, vector_degree
from .order import DEGREVLEX, MonomialOrder, block_order
from .poly import Polynomial
from .ring import (
    PolynomialRing,
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
)

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "SyzygyResult",
    "syzygies",
    "eliminate",
    "minimalize_generators",
]

logger = logging.getLogger(__name__)

Vector = Dict[Term, Coefficient]
KeyFunction = Callable[[Term], Any]


# ----- sparse vector kernels -----
def _lead(v: Vector, keyf: KeyFunction) -> Term:
    return max(v, key=keyf)


def _monic(v: Vector, keyf: KeyFunction, F: FieldSpec) -> Vector:
    c = v[_lead(v, keyf)]
    if c == 1:
        return v
    inv = F.inv(c)
    return {t: F.mul(a, inv) for t, a in v.items()}


def _sub_multiple(p: Vector, g: Vector, q, c: Coefficient, F: FieldSpec) -> None:
    # p <- p - c * q * g, in place
    for (k, m), b in g.items():
        t = (k, monomial_mul(m, q))
        s = F.sub(p.get(t, 0), F.mul(c, b))
        if s == 0:
            p.pop(t, None)
        else:
            p[t] = s


class _Reducers(object):
    """Leading terms of monic basis vectors, indexed by position."""

    def __init__(self):
        self.by_position: Dict[int, List[Tuple[Any, Vector]]] = {}

    def add(self, lt: Term, v: Vector) -> None:
        self.by_position.setdefault(lt[0], []).append((lt[1], v))

    def find(self, t: Term):
        for lm, v in self.by_position.get(t[0], ()):
            if monomial_divides(lm, t[1]):
                return lm, v
        return None


def _reduce(v: Vector, reducers: _Reducers, keyf: KeyFunction, F: FieldSpec, full: bool = True) -> Vector:
    p = dict(v)
    r: Vector = {}
    while p:
        t = _lead(p, keyf)
        hit = reducers.find(t)
        if hit is None:
            if not full:
                p.update(r)
                return p
            r[t] = p.pop(t)
            continue
        lm, g = hit
        _sub_multiple(p, g, monomial_quotient(t[1], lm), p[t], F)
    return r


# ----- Buchberger -----
def _buchberger(
    vectors: Sequence[Vector],
    keyf: KeyFunction,
    degree: Callable[[Term], int],
    F: FieldSpec,
    product_criterion: bool,
) -> List[Vector]:
    """Reduced Groebner basis of homogeneous sparse vectors.

    ``degree`` is the total degree of a term; it drives the normal strategy.
    """
    G: List[Vector] = []
    leads: List[Term] = []
    pairs: Dict[Tuple[int, int], Term] = {}
    heap: List[Tuple[int, int, int]] = []

    def update(h: Vector) -> None:
        lt_h = _lead(h, keyf)
        n = len(G)
        pos, mh = lt_h
        # B criterion on the existing pairs
        for (i, j), (_, L) in list(pairs.items()):
            if leads[i][0] != pos or not monomial_divides(mh, L):
                continue
            if L != monomial_lcm(leads[i][1], mh) and L != monomial_lcm(leads[j][1], mh):
                del pairs[(i, j)]
        # M and F criteria among the new pairs
        classes: Dict[Any, List[int]] = {}
        for i, (k, m) in enumerate(leads):
            if k == pos:
                classes.setdefault(monomial_lcm(m, mh), []).append(i)
        minimal: List[Any] = []
        for L in sorted(classes, key=lambda L: keyf((pos, L))):
            if all(not monomial_divides(L2, L) for L2 in minimal):
                minimal.append(L)
        for L in minimal:
            if product_criterion and any(
                not any(monomial_gcd(leads[i][1], mh)) for i in classes[L]
            ):
                continue
            i = min(classes[L])
            pairs[(i, n)] = (pos, L)
            heapq.heappush(heap, (degree((pos, L)), i, n))
        G.append(h)
        leads.append(lt_h)

    for v in vectors:
        update(_monic(v, keyf, F))

    reducers = _Reducers()
    for lt, g in zip(leads, G):
        reducers.add(lt, g)

    n_reductions = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        _, L = pairs.pop((i, j))
        gi, gj = G[i], G[j]
        s = {}
        _sub_multiple(s, gi, monomial_quotient(L, leads[i][1]), F.neg(F.one), F)
        _sub_multiple(s, gj, monomial_quotient(L, leads[j][1]), F.one, F)
        r = _reduce(s, reducers, keyf, F, full=False)
        n_reductions += 1
        if r:
            h = _monic(r, keyf, F)
            update(h)
            reducers.add(leads[-1], h)
    logger.debug("buchberger: %d pair reductions, %d basis vectors", n_reductions, len(G))
    return _interreduce(_minimalize(G, leads, keyf), keyf, F)


def _minimalize(G: List[Vector], leads: List[Term], keyf: KeyFunction) -> List[Vector]:
    order = sorted(range(len(G)), key=lambda i: keyf(leads[i]))
    kept: List[int] = []
    for i in order:
        k, m = leads[i]
        if all(not (leads[j][0] == k and monomial_divides(leads[j][1], m)) for j in kept):
            kept.append(i)
    return [G[i] for i in kept]


def _interreduce(G: List[Vector], keyf: KeyFunction, F: FieldSpec) -> List[Vector]:
    out: List[Vector] = []
    for i, g in enumerate(G):
        reducers = _Reducers()
        for j, h in enumerate(G):
            if j != i:
                reducers.add(_lead(h, keyf), h)
        lt = _lead(g, keyf)
        tail = dict(g)
        c = tail.pop(lt)
        tail = _reduce(tail, reducers, keyf, F)
        tail[lt] = c
        out.append(_monic(tail, keyf, F))
    out.sort(key=lambda v: keyf(_lead(v, keyf)))
    return out


# ----- public interface -----
class GroebnerBasis(object):
    """A reduced Groebner basis of a graded submodule.

    Parameters
    ----------
    module : FreeModule
        The ambient free module
    order : MonomialOrder
    generators : list of ModuleVector
        Monic, interreduced, sorted by increasing leading term
    """

    def __init__(self, module: FreeModule, order: MonomialOrder, generators: List[ModuleVector]):
        self.module = module
        self.order = order
        self.generators = generators
        self._keyf: Optional[KeyFunction] = None
        self._reducers: Optional[_Reducers] = None

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_keyf"] = None
        state["_reducers"] = None
        return state

    @property
    def key(self) -> KeyFunction:
        if self._keyf is None:
            self._keyf = self.order.term_key(self.module.ring, self.module.twists)
        return self._keyf

    @property
    def reducers(self) -> _Reducers:
        if self._reducers is None:
            self._reducers = _Reducers()
            for g in self.generators:
                self._reducers.add(_lead(g.terms, self.key), g.terms)
        return self._reducers

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_terms(self) -> List[Term]:
        return [_lead(g.terms, self.key) for g in self.generators]

    def initial_module(self) -> List[ModuleVector]:
        """Generators of the leading-term module, with coefficient 1."""
        return [ModuleVector._raw(self.module, {t: 1}) for t in self.leading_terms()]

    def polynomials(self) -> List[Polynomial]:
        """Generators as polynomials, for a rank-one ambient module."""
        if self.module.rank != 1:
            raise ParameterError("polynomials() needs a rank-one ambient module")
        return [g.entry(0) for g in self.generators]

    def normal_form(self, v: ModuleVector) -> ModuleVector:
        return normal_form(v, self)

    def contains(self, v: ModuleVector) -> bool:
        return normal_form(v, self).is_zero()

    def __repr__(self) -> str:
        return f"GroebnerBasis({[str(g) for g in self.generators]}, {self.order})"


def _as_vectors(gens: Sequence[Union[Polynomial, ModuleVector]], module: Optional[FreeModule]):
    if module is None:
        if not gens:
            raise ParameterError("an empty generator list needs an explicit ambient module")
        first = gens[0]
        module = first.module if isinstance(first, ModuleVector) else FreeModule.cyclic(first.ring)
    out = []
    for g in gens:
        if isinstance(g, Polynomial):
            if module.rank != 1 or g.ring != module.ring:
                raise RingMismatchError(f"{g} does not belong to {module}")
            g = ModuleVector._raw(module, {(0, m): c for m, c in g.terms.items()})
        elif g.module != module:
            raise RingMismatchError(f"{g} does not belong to {module}")
        out.append(g)
    return module, out


def _degree_function(module: FreeModule) -> Callable[[Term], int]:
    weights = module.ring.weights
    shift = [sum(t) for t in module.twists]
    return lambda t: sum(e * w for e, w in zip(t[1], weights)) + shift[t[0]]


def _check_homogeneous(module: FreeModule, vectors: Sequence[ModuleVector]) -> None:
    for v in vectors:
        if v.terms and vector_degree(module.ring, module.twists, v.terms) is None:
            raise InhomogeneousError(f"{v} is not homogeneous; the engine is graded-only")


@cache(level=10)
def buchberger(
    gens: Sequence[Union[Polynomial, ModuleVector]],
    order: MonomialOrder = DEGREVLEX,
    module: Optional[FreeModule] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by ``gens``.

    Parameters
    ----------
    gens : list of Polynomial or ModuleVector
        Homogeneous generators. Polynomials are read as vectors of a rank-one
        module with twist zero.
    order : MonomialOrder
    module : FreeModule, optional
        Ambient module, required when ``gens`` is empty

    Returns
    -------
    GroebnerBasis

    Raises
    ------
    InhomogeneousError
        If some generator is not homogeneous

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> G = buchberger([x**2 + y**2, x*y])
    >>> [str(g) for g in G]
    ['x*y', 'x^2 + y^2', 'y^3']
    """
    module, vectors = _as_vectors(gens, module)
    _check_homogeneous(module, vectors)
    keyf = order.term_key(module.ring, module.twists)
    degree = _degree_function(module)
    raw = sorted(
        (v.terms for v in vectors if v.terms),
        key=lambda t: (degree(_lead(t, keyf)), keyf(_lead(t, keyf))),
    )
    basis = _buchberger(raw, keyf, degree, module.ring.field, product_criterion=module.rank == 1)
    return GroebnerBasis(module, order, [ModuleVector._raw(module, b) for b in basis])


def normal_form(v: Union[Polynomial, ModuleVector], G: GroebnerBasis) -> ModuleVector:
    """Fully reduced remainder of ``v`` modulo a Groebner basis.

    Raises
    ------
    RingMismatchError
        If ``v`` does not belong to the ambient module of ``G``

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> str(normal_form(x**2 + y**2, buchberger([x**2 - y**2])))
    '2*y^2'
    """
    _, (v,) = _as_vectors([v], G.module)
    r = _reduce(v.terms, G.reducers, G.key, G.module.ring.field)
    return ModuleVector._raw(G.module, r)


# ----- syzygies -----
@dataclass
class SyzygyResult:
    """Generators of the syzygy module of a list of vectors.

    Attributes
    ----------
    gens : list of ModuleVector
        The input vectors ``g_1, ..., g_r`` in a free module ``F``
    module : FreeModule
        ``S^r`` with twists ``deg g_j``
    syzygies : list of ModuleVector
        Vectors ``s`` of ``module`` with ``sum_k s_k g_k = 0``; together they
        generate every such relation
    groebner : GroebnerBasis
        Groebner basis of the submodule generated by ``gens``, obtained as a
        by-product
    """

    gens: List[ModuleVector]
    module: FreeModule
    syzygies: List[ModuleVector]
    groebner: GroebnerBasis = field(repr=False)

    def combine(self, s: ModuleVector) -> ModuleVector:
        """``sum_k s_k g_k`` in the ambient module of the generators."""
        ambient = self.groebner.module
        out: Vector = {}
        F = ambient.ring.field
        for k, entry in enumerate(s.entries()):
            if entry:
                out = add_terms(F, out, self.gens[k].scale(entry).terms)
        return ModuleVector._raw(ambient, out)

    def verify(self) -> bool:
        """Multiply out every syzygy; raises `GroebnerError` on a nonzero result."""
        for s in self.syzygies:
            if self.combine(s):
                raise GroebnerError(f"{s} is not a syzygy of the generators")
        return True


def syzygies(
    gens: Sequence[ModuleVector],
    order: MonomialOrder = DEGREVLEX,
    degrees: Optional[Sequence[Multidegree]] = None,
    module: Optional[FreeModule] = None,
) -> SyzygyResult:
    """Syzygy module of homogeneous vectors, by Schreyer's construction.

    Each generator is tracked by a fresh basis vector: a Groebner basis of
    the vectors ``g_j + eps_j`` of ``F + S^r`` is computed under an order
    placing every ``F`` term above every ``eps`` term, with the order on the
    ``eps`` part induced by the leading terms of the ``g_j``. The basis
    elements without ``F`` part generate the syzygies.

    Parameters
    ----------
    gens : list of ModuleVector
        Homogeneous vectors of one free module (zero vectors allowed)
    order : MonomialOrder
        Order on the ambient module of ``gens``
    degrees : list of multidegrees, optional
        Degrees of the generators; required for zero generators
    module : FreeModule, optional
        Ambient module, required when ``gens`` is empty

    Returns
    -------
    SyzygyResult

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> syz = syzygies([x**2, x*y])
    >>> [str(s) for s in syz.syzygies]
    ['[y, -x]']
    """
    F0, vectors = _as_vectors(list(gens), module)
    _check_homogeneous(F0, vectors)
    ring, field_ = F0.ring, F0.ring.field
    r = len(vectors)

    if degrees is None:
        degrees = []
        for v in vectors:
            if not v.terms:
                raise ParameterError("zero generators need explicit degrees")
            degrees.append(v.degree())
    degrees = [tuple(d) for d in degrees]
    target = FreeModule(ring, degrees)

    base_key = order.term_key(ring, F0.twists)
    nonzero = [j for j in range(r) if vectors[j].terms]
    leads = [_lead(vectors[j].terms, base_key) for j in nonzero]
    R0 = F0.rank
    schreyer = MonomialOrder.schreyer_induced(order, F0.twists, leads)
    eps_key = schreyer.term_key(ring, [degrees[j] for j in nonzero])

    def keyf(t: Term):
        if t[0] < R0:
            return (1, base_key(t))
        return (0, eps_key((t[0] - R0, t[1])))

    shifts = [sum(t) for t in F0.twists] + [sum(degrees[j]) for j in nonzero]
    weights = ring.weights

    def degree(t: Term) -> int:
        return sum(e * w for e, w in zip(t[1], weights)) + shifts[t[0]]

    one = ring.one()
    augmented = []
    for i, j in enumerate(nonzero):
        v = dict(vectors[j].terms)
        v[(R0 + i, one)] = field_.one
        augmented.append(v)
    augmented.sort(key=lambda v: (degree(_lead(v, keyf)), keyf(_lead(v, keyf))))

    basis = _buchberger(augmented, keyf, degree, field_, product_criterion=False)

    syz: List[ModuleVector] = []
    gb: List[ModuleVector] = []
    for b in basis:
        if _lead(b, keyf)[0] >= R0:
            syz.append(
                ModuleVector._raw(target, {(nonzero[k - R0], m): c for (k, m), c in b.items()})
            )
        else:
            gb.append(ModuleVector._raw(F0, {t: c for t, c in b.items() if t[0] < R0}))
    for j in range(r):
        if not vectors[j].terms:
            syz.append(ModuleVector._raw(target, {(j, one): field_.one}))

    # F parts of the remaining elements form a (not necessarily reduced) basis
    groebner = buchberger(gb, order, module=F0) if gb else GroebnerBasis(F0, order, [])
    logger.debug("syzygies: %d generators, %d syzygies", r, len(syz))
    return SyzygyResult(list(vectors), target, syz, groebner)


# ----- generator minimalization -----
def minimalize_generators(
    gens: Sequence[Union[Polynomial, ModuleVector]],
    module: Optional[FreeModule] = None,
    order: MonomialOrder = DEGREVLEX,
) -> List[ModuleVector]:
    """A minimal homogeneous generating set extracted from ``gens``.

    Generators are visited by increasing degree (input order breaks ties);
    one is kept when it does not lie in the submodule generated by the
    ones kept so far.
    """
    module, vectors = _as_vectors(list(gens), module)
    _check_homogeneous(module, vectors)
    indexed = [(sum(v.degree()), i, v) for i, v in enumerate(vectors) if v.terms]
    indexed.sort(key=lambda t: (t[0], t[1]))
    kept: List[ModuleVector] = []
    G: Optional[GroebnerBasis] = None
    for _, _, v in indexed:
        if G is not None and G.contains(v):
            continue
        kept.append(v)
        G = buchberger(kept, order, module=module)
    return kept


# ----- elimination -----
def eliminate(
    gens: Sequence[Polynomial],
    keep: Sequence[str],
    degrees: Optional[Sequence[Multidegree]] = None,
    target: Optional[PolynomialRing] = None,
) -> List[Polynomial]:
    """Reduced Groebner basis of ``(gens)`` intersected with a subring.

    Parameters
    ----------
    gens : list of Polynomial
        Generators in a ring ``R``
    keep : list of str
        Names of the variables spanning the subring
    degrees : list of multidegrees, optional
        A grading of ``R`` (one degree per variable, in ``R``'s order) in
        which every generator is homogeneous; defaults to the grading of ``R``
    target : PolynomialRing, optional
        Ring to return the result in; defaults to the subring of ``R``
        with the kept variables and their degrees

    Returns
    -------
    list of Polynomial

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['t', 'x', 'y', 'Y1', 'Y2'], [1, 1, 1, 2, 2])
    >>> t, x, y, Y1, Y2 = R.gens()
    >>> [str(f) for f in eliminate([Y1 - t*x, Y2 - t*y], ['x', 'y', 'Y1', 'Y2'])]
    ['y*Y1 - x*Y2']
    """
    if not gens:
        raise ParameterError("eliminate needs at least one generator")
    ring = gens[0].ring
    keep = list(keep)
    missing = [name for name in keep if name not in ring.index]
    if missing or not keep:
        raise ParameterError(f"cannot keep variables {keep} of {ring}")
    drop = [name for name in ring.names if name not in keep]
    if degrees is None:
        degrees = ring.degrees
    weight = {name: d for name, d in zip(ring.names, degrees)}
    work = PolynomialRing(ring.field, drop + keep, [weight[n] for n in drop + keep])
    if target is None:
        target = PolynomialRing(ring.field, keep, [ring.degrees[ring.index[n]] for n in keep])

    polys = [g.change_ring(work) for g in gens]
    order = block_order(len(drop)) if drop else DEGREVLEX
    G = buchberger(polys, order)
    k = len(drop)
    out = [g for g in G.polynomials() if all(not any(m[:k]) for m in g.terms)]
    logger.debug("eliminate: %d of %d basis elements survive", len(out), len(G))
    return [g.change_ring(target).primitive() for g in out]
