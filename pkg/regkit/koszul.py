#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Koszul homology and duality
===========================

Two computations of the regularity that do not read the twists of a
resolution: the Koszul complex of the variables on ``M``, and the
cohomology of the dualized minimal resolution (graded local duality over
a field).

.. autosummary::
    :toctree: generated/

    KoszulComplex
    koszul_homology
    KoszulSummary
    koszul_summary
    t_invariants
    DualityReport
    reg_via_duality
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ._typing import ExtendedInt, Multidegree, Term
from .core.groebner import GroebnerBasis, buchberger, normal_form, syzygies
from .core.linalg import rank
from .core.module import FreeModule, ModuleVector
from .core.order import DEGREVLEX
from .core.ring import degree_sub, monomial_divides, monomial_mul
from .resolve import (
    RESOLUTION_ORDER,
    PresentedModule,
    betti_table,
    minimal_free_resolution,
    presentation_of,
    summary,
)
from .util.exceptions import ParameterError
from .util.utils import NEG_INF, format_value, is_neg_inf, valid_int

__all__ = [
    "KoszulComplex",
    "koszul_homology",
    "KoszulSummary",
    "koszul_summary",
    "t_invariants",
    "DualityReport",
    "reg_via_duality",
]

logger = logging.getLogger(__name__)


class GradedPieces(object):
    """Degree pieces ``M_d`` of ``M = F0 / U`` on standard monomials.

    A basis of ``M_d`` is the set of terms of ``F0`` of degree ``d`` outside
    the leading-term module of ``U``, listed in decreasing monomial order.
    """

    def __init__(self, M: PresentedModule):
        self.module = M
        self.F0 = M.ambient
        self.ring = M.ring
        self.groebner: GroebnerBasis = buchberger(M.relations, DEGREVLEX, module=self.F0)
        self._leads = self.groebner.leading_terms()
        self._key = self.groebner.key
        self._bases: Dict[int, List[Term]] = {}
        self._products: Dict[Tuple[int, Term], Dict[Term, Any]] = {}

    def _standard(self, t: Term) -> bool:
        return not any(k == t[0] and monomial_divides(m, t[1]) for k, m in self._leads)

    def basis(self, d: int) -> List[Term]:
        if d not in self._bases:
            terms = []
            for k, twist in enumerate(self.F0.twists):
                for m in self.ring.monomials_of_degree(d - twist[0]):
                    if self._standard((k, m)):
                        terms.append((k, m))
            terms.sort(key=self._key, reverse=True)
            self._bases[d] = terms
        return self._bases[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def times_variable(self, s: int, t: Term) -> Dict[Term, Any]:
        """``x_s * t`` in standard-monomial coordinates."""
        key = (s, t)
        if key not in self._products:
            m = monomial_mul(t[1], self.ring.variable(s))
            v = ModuleVector._raw(self.F0, {(t[0], m): self.ring.field.one})
            self._products[key] = normal_form(v, self.groebner).terms
        return self._products[key]


class KoszulComplex(object):
    """The Koszul complex of the variables on a module over a standard graded ring.

    ``K_i(M)_j`` is spanned by ``e_A (x) m`` for ``|A| = i`` and ``m`` in the
    standard basis of ``M_{j-i}``, with
    ``d(e_A (x) m) = sum_s (-1)^s x_{a_s} m (x) e_{A - a_s}``.
    """

    def __init__(self, M: Any):
        M = presentation_of(M)
        if not M.ring.is_standard:
            raise ParameterError("Koszul homology is computed over standard graded rings only")
        self.module = M
        self.n = M.ring.ngens
        self.pieces = GradedPieces(M)
        self._ranks: Dict[Tuple[int, int], int] = {}

    def subsets(self, i: int):
        return list(itertools.combinations(range(self.n), i))

    def dim(self, i: int, j: int) -> int:
        if not 0 <= i <= self.n:
            return 0
        return len(self.subsets(i)) * self.pieces.dim(j - i)

    def boundary_rank(self, i: int, j: int) -> int:
        """Rank of ``d_i: K_i(M)_j -> K_{i-1}(M)_j``."""
        if i < 1 or i > self.n:
            return 0
        if (i, j) in self._ranks:
            return self._ranks[(i, j)]
        F = self.module.ring.field
        rows = []
        basis = self.pieces.basis(j - i)
        for A in self.subsets(i):
            for t in basis:
                row: Dict = {}
                for s, a in enumerate(A):
                    face = A[:s] + A[s + 1 :]
                    sign = F.one if s % 2 == 0 else F.neg(F.one)
                    for u, c in self.pieces.times_variable(a, t).items():
                        col = (face, u)
                        val = F.add(row.get(col, 0), F.mul(sign, c))
                        if val == 0:
                            row.pop(col, None)
                        else:
                            row[col] = val
                rows.append(row)
        r = rank(rows, F)
        self._ranks[(i, j)] = r
        return r

    def homology(self, i: int, j: int) -> int:
        """``dim H_i(M)_j``."""
        if not 0 <= i <= self.n:
            return 0
        return self.dim(i, j) - self.boundary_rank(i, j) - self.boundary_rank(i + 1, j)


def koszul_homology(M: Any, i: int, j: int) -> int:
    """Dimension of the Koszul homology ``H_i(x; M)`` in degree ``j``.

    Parameters
    ----------
    M : Ideal, Submodule, Cokernel or PresentedModule
        Over a standard graded ring
    i : int
        Homological index, ``0 <= i <= n``
    j : int
        Internal degree; degrees below the generators give 0

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> koszul_homology(quotient_ring(Ideal(R, R.gens())), 2, 2)
    1
    """
    i = valid_int(i, name="i", minimum=0)
    j = valid_int(j, name="j")
    return KoszulComplex(M).homology(i, j)


@dataclass
class KoszulSummary:
    """Koszul homology dimensions scanned up to a degree bound.

    Attributes
    ----------
    ranks : dict
        ``(i, j) -> dim H_i(M)_j``, nonzero entries only
    t : list
        ``t_i(M)``: the top degree with ``H_i(M)_j != 0`` (``NEG_INF`` if none)
    reg1 : int
        ``max_i (t_i - i)``
    bound_used : int
    euler_ok : bool
        Degreewise Euler characteristics of the complex and of its homology agree
    """

    ranks: Dict[Tuple[int, int], int]
    t: List[ExtendedInt]
    reg1: ExtendedInt
    bound_used: ExtendedInt
    euler_ok: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {
                "ranks": [[i, j, r] for (i, j), r in sorted(self.ranks.items())],
                "t": self.t,
                "reg1": self.reg1,
                "bound": self.bound_used,
                "euler_ok": self.euler_ok,
            }
        )


def koszul_summary(M: Any, bound: Optional[int] = None) -> KoszulSummary:
    """Scan ``H_i(M)_j`` for all ``i`` and ``j <= bound``.

    Parameters
    ----------
    M : module
    bound : int, optional
        Largest degree scanned. Defaults to ``reg_3(M) + n + 1``, which
        includes the first degree past every predicted top degree.

    Returns
    -------
    KoszulSummary

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> koszul_summary(Ideal(R, [x**2, x*y])).reg1
    2
    """
    M = presentation_of(M)
    n = M.ring.ngens
    if M.is_zero():
        return KoszulSummary({}, [NEG_INF] * (n + 1), NEG_INF, NEG_INF)
    if bound is None:
        reg3 = summary(betti_table(minimal_free_resolution(M)), n).reg3
        bound = reg3 + n + 1
    bound = valid_int(bound, name="bound")
    K = KoszulComplex(M)
    low = min(t[0] for t in M.ambient.twists)
    ranks: Dict[Tuple[int, int], int] = {}
    euler_ok = True
    for j in range(low, bound + 1):
        chi_k = chi_h = 0
        for i in range(0, n + 1):
            h = K.homology(i, j)
            sign = -1 if i % 2 else 1
            chi_k += sign * K.dim(i, j)
            chi_h += sign * h
            if h:
                ranks[(i, j)] = h
        euler_ok = euler_ok and chi_k == chi_h
    t = [max((j for (k, j) in ranks if k == i), default=NEG_INF) for i in range(n + 1)]
    finite = [ti - i for i, ti in enumerate(t) if not is_neg_inf(ti)]
    reg1 = max(finite) if finite else NEG_INF
    logger.debug("koszul summary up to degree %d: reg1 = %s", bound, reg1)
    return KoszulSummary(ranks, t, reg1, bound, euler_ok)


def t_invariants(M: Any, bound: Optional[int] = None) -> List[ExtendedInt]:
    """``t_i(M)`` for ``i = 0..n``."""
    return koszul_summary(M, bound).t


# ----- duality -----
@dataclass
class DualityReport:
    """Cohomology of the dualized minimal resolution.

    Attributes
    ----------
    ext_bidegrees : dict
        ``(k, j) -> dim Ext^k(M, S(-n))_j`` over the scanned window
    reg_via_duality : int
        ``max (n - k) - j`` over the nonzero entries
    n : int
    """

    ext_bidegrees: Dict[Tuple[int, int], int]
    reg_via_duality: ExtendedInt
    n: int = 0
    windows: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    def local_cohomology(self) -> Dict[Tuple[int, int], int]:
        """The same data as ``(i, j) -> dim H^i_Q(M)_j`` with ``i = n - k``."""
        return {(self.n - k, -j): r for (k, j), r in self.ext_bidegrees.items()}

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {
                "ext": [[k, j, r] for (k, j), r in sorted(self.ext_bidegrees.items())],
                "reg_via_duality": self.reg_via_duality,
            }
        )


class _DualComplex(object):
    """``C^k = Hom(F_k, S(-n))`` with ``delta^k = d_{k+1}`` transposed."""

    def __init__(self, resolution):
        self.res = resolution
        self.ring = resolution.ring
        self.n = self.ring.ngens
        self.length = len(resolution.modules) - 1
        self.modules = [
            FreeModule(self.ring, [(self.n - a[0],) for a in F.twists]) for F in resolution.modules
        ]
        self._rows: Dict[int, List[Dict[Term, Any]]] = {}

    def rows(self, k: int) -> List[Dict[Term, Any]]:
        """Images ``delta^k(e_r^*)`` as term maps of ``C^{k+1}``."""
        if k not in self._rows:
            out: List[Dict[Term, Any]] = [{} for _ in range(self.res.modules[k].rank)]
            if k < self.length:
                for c, col in enumerate(self.res.differentials[k]):
                    for (r, m), a in col.terms.items():
                        out[r][(c, m)] = a
            self._rows[k] = out
        return self._rows[k]

    def basis(self, k: int, j: int) -> List[Term]:
        C = self.modules[k]
        return [(b, m) for b, t in enumerate(C.twists) for m in self.ring.monomials_of_degree(j - t[0])]

    def delta_rank(self, k: int, j: int) -> int:
        if k < 0 or k >= self.length:
            return 0
        rows = self.rows(k)
        images = []
        for b, m in self.basis(k, j):
            images.append({(c, monomial_mul(mm, m)): a for (c, mm), a in rows[b].items()})
        return rank(images, self.ring.field)

    def cohomology(self, k: int, j: int) -> int:
        return len(self.basis(k, j)) - self.delta_rank(k, j) - self.delta_rank(k - 1, j)

    def window(self, k: int) -> Tuple[ExtendedInt, ExtendedInt]:
        """Degrees that can carry ``Ext^k``: from the lowest generator of
        ``C^k`` to the highest generator of ``ker delta^k``."""
        C = self.modules[k]
        lo = min(t[0] for t in C.twists)
        if k == self.length:
            return lo, max(t[0] for t in C.twists)
        target = self.modules[k + 1]
        vectors = [ModuleVector._raw(target, row) for row in self.rows(k)]
        syz = syzygies(vectors, RESOLUTION_ORDER, degrees=C.twists, module=target)
        if not syz.syzygies:
            return lo, NEG_INF
        return lo, max(s.degree()[0] for s in syz.syzygies)


def reg_via_duality(M: Any) -> DualityReport:
    """Regularity from ``Ext^k(M, S(-n))`` of the dualized minimal resolution.

    By graded local duality ``H^i_Q(M)_j`` is dual to
    ``Ext^{n-i}(M, S(-n))_{-j}``, so the regularity is the largest
    ``(n - k) - j`` with ``Ext^k(M, S(-n))_j != 0``. For each ``k`` the
    degrees from the lowest generator of ``C^k`` up to the top generator
    of the cycles are scanned.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x'])
    >>> x, = R.gens()
    >>> reg_via_duality(quotient_ring(Ideal(R, [x**2]))).reg_via_duality
    1
    """
    M = presentation_of(M)
    if not M.ring.is_standard:
        raise ParameterError("duality is computed over standard graded rings only")
    n = M.ring.ngens
    res = minimal_free_resolution(M)
    if not res.modules:
        return DualityReport({}, NEG_INF, n)
    C = _DualComplex(res)
    ext: Dict[Tuple[int, int], int] = {}
    windows: Dict[int, Tuple[int, int]] = {}
    for k in range(C.length + 1):
        lo, hi = C.window(k)
        if is_neg_inf(hi):
            continue
        windows[k] = (lo, hi)
        for j in range(lo, hi + 1):
            r = C.cohomology(k, j)
            if r:
                ext[(k, j)] = r
    values = [(n - k) - j for (k, j) in ext]
    reg = max(values) if values else NEG_INF
    logger.debug("duality: %d nonzero Ext pieces, reg = %s", len(ext), reg)
    return DualityReport(ext, reg, n, windows)
