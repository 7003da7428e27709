#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Minimal free resolutions
========================

Presentations
-------------
.. autosummary::
    :toctree: generated/

    Submodule
    Cokernel
    PresentedModule
    presentation_of
    quotient_ring
    shift_module
    direct_sum

Resolutions and Betti numbers
-----------------------------
.. autosummary::
    :toctree: generated/

    Resolution
    minimal_free_resolution
    BettiTable
    betti_table
    ResolutionSummary
    summary
    regularity
    is_linear_resolution

Ideal constructions
-------------------
.. autosummary::
    :toctree: generated/

    ideal_sum
    intersect_ideals
    ses_regularity_bounds
"""

import logging
import warnings
from dataclasses import dataclass, field
from functools import singledispatch
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ._cache import cache
from ._typing import Coefficient, ExtendedInt, Multidegree, Term
from .core.groebner import buchberger, minimalize_generators, syzygies
from .core.ideal import Ideal
from .core.module import FreeModule, ModuleVector, add_terms
from .core.order import MonomialOrder
from .core.ring import PolynomialRing, degree_sub, monomial_mul
from .util.exceptions import (
    ParameterError,
    RegkitWarning,
    ResolutionError,
    RingMismatchError,
)
from .util.utils import NEG_INF, format_value, is_neg_inf, valid_multidegree

__all__ = [
    "Submodule",
    "Cokernel",
    "PresentedModule",
    "presentation_of",
    "quotient_ring",
    "shift_module",
    "direct_sum",
    "Resolution",
    "minimal_free_resolution",
    "BettiTable",
    "betti_table",
    "ResolutionSummary",
    "summary",
    "regularity",
    "is_linear_resolution",
    "ideal_sum",
    "intersect_ideals",
    "SESReport",
    "ses_regularity_bounds",
]

logger = logging.getLogger(__name__)

#: Module order used for every syzygy step
RESOLUTION_ORDER = MonomialOrder("degrevlex", module="top")


# ----- input forms -----
@dataclass
class Submodule:
    """The submodule of a free module generated by homogeneous vectors."""

    module: FreeModule
    generators: List[ModuleVector]


@dataclass
class Cokernel:
    """``F / <relations>`` for homogeneous relation vectors of ``F``."""

    module: FreeModule
    relations: List[ModuleVector]


@dataclass
class PresentedModule:
    """A graded module in normal form ``F0 / <relations>``.

    Attributes
    ----------
    ambient : FreeModule
        ``F0``; its basis maps onto a minimal generating set of the module
    relations : list of ModuleVector
        Minimal homogeneous generators of the relation submodule of ``F0``
    kind : {'ideal', 'submodule', 'cokernel'}
        The form the module was given in
    embedding : list of ModuleVector, optional
        For ideals and submodules, the images of the basis of ``F0`` (the
        minimal generators) in the original free module
    """

    ambient: FreeModule
    relations: List[ModuleVector]
    kind: str = "cokernel"
    embedding: Optional[List[ModuleVector]] = None

    @property
    def ring(self) -> PolynomialRing:
        return self.ambient.ring

    def is_zero(self) -> bool:
        return self.ambient.rank == 0

    def generator_degrees(self) -> List[Multidegree]:
        return sorted(self.ambient.twists)

    def t0(self) -> ExtendedInt:
        """Largest degree of a minimal generator (``NEG_INF`` for zero)."""
        if self.is_zero():
            return NEG_INF
        return max(sum(t) for t in self.ambient.twists)

    def cokernel(self) -> Cokernel:
        return Cokernel(self.ambient, list(self.relations))

    def __str__(self) -> str:
        twists = ", ".join(_twist_text(t) for t in self.ambient.twists)
        return f"{self.kind} with generators in degrees [{twists}] and {len(self.relations)} relations"


def _twist_text(t: Multidegree) -> str:
    return str(t[0]) if len(t) == 1 else str(tuple(t))


# ----- matrix surgery on raw columns -----
def _one(ring: PolynomialRing):
    return ring.one()


def _find_unit(cols: List[Dict[Term, Coefficient]], one) -> Optional[Tuple[int, int]]:
    for c, col in enumerate(cols):
        rows = sorted(k for (k, m) in col if m == one)
        if rows:
            return rows[0], c
    return None


def _pivot(
    cols: List[Dict[Term, Coefficient]], r: int, c: int, field_, one
) -> List[Dict[Term, Coefficient]]:
    """Use the unit at ``(r, c)`` to clear row ``r``; drop row ``r`` and column ``c``."""
    pc = cols[c]
    u_inv = field_.inv(pc[(r, one)])
    out = []
    for c2, col in enumerate(cols):
        if c2 == c:
            continue
        row_part = [(m, a) for (k, m), a in col.items() if k == r]
        for m, a in row_part:
            scale = field_.mul(a, u_inv)
            shifted = {(k, monomial_mul(mm, m)): b for (k, mm), b in pc.items()}
            col = add_terms(field_, col, shifted, field_.neg(scale))
        col = {(k if k < r else k - 1, m): a for (k, m), a in col.items() if k != r}
        out.append(col)
    return out


def _drop_column(cols: List, r: int) -> List:
    return [col for j, col in enumerate(cols) if j != r]


def _vectors(module: FreeModule, cols: List[Dict[Term, Coefficient]]) -> List[ModuleVector]:
    return [ModuleVector._raw(module, col) for col in cols if col]


def _prune_presentation(
    twists: List[Multidegree], cols: List[Dict[Term, Coefficient]], ring: PolynomialRing
) -> Tuple[List[Multidegree], List[Dict[Term, Coefficient]], List[int]]:
    """Pivot unit relations away; returns surviving twists, columns and row indices."""
    one = _one(ring)
    alive = list(range(len(twists)))
    twists = list(twists)
    cols = [c for c in cols if c]
    while True:
        hit = _find_unit(cols, one)
        if hit is None:
            break
        r, c = hit
        cols = [col for col in _pivot(cols, r, c, ring.field, one) if col]
        del twists[r]
        del alive[r]
    return twists, cols, alive


# ----- presentation_of -----
@singledispatch
def presentation_of(obj: Any) -> PresentedModule:
    """Normal form ``F0 / <relations>`` with a minimal generating set.

    Parameters
    ----------
    obj : Ideal, Submodule, Cokernel or PresentedModule

    Returns
    -------
    PresentedModule
        Zero modules are returned with a rank-zero ``ambient`` and flagged
        through `PresentedModule.is_zero`.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> M = presentation_of(Ideal(R, [x**2, x*y, x**2 + x*y]))
    >>> M.ambient.rank
    2
    """
    raise ParameterError(f"cannot present an object of type {type(obj).__name__}")


@presentation_of.register
def _(obj: PresentedModule) -> PresentedModule:
    return obj


@presentation_of.register
def _(obj: Ideal) -> PresentedModule:
    M = presentation_of(Submodule(obj.module, obj.vectors()))
    M.kind = "ideal"
    return M


@presentation_of.register
def _(obj: Submodule) -> PresentedModule:
    gens = minimalize_generators(obj.generators, module=obj.module)
    ring = obj.module.ring
    F0 = FreeModule(ring, [g.degree() for g in gens])
    if not gens:
        return PresentedModule(F0, [], "submodule", [])
    syz = syzygies(gens, RESOLUTION_ORDER, module=obj.module)
    rel = minimalize_generators(syz.syzygies, module=syz.module) if syz.syzygies else []
    rel = [ModuleVector._raw(F0, r.terms) for r in rel]
    return PresentedModule(F0, rel, "submodule", gens)


@presentation_of.register
def _(obj: Cokernel) -> PresentedModule:
    F = obj.module
    for r in obj.relations:
        if r.module != F:
            raise RingMismatchError(f"relation {r} does not belong to {F}")
    twists, cols, _ = _prune_presentation(list(F.twists), [r.terms for r in obj.relations], F.ring)
    F0 = FreeModule(F.ring, twists)
    if F0.rank == 0:
        return PresentedModule(F0, [], "cokernel")
    rel = _vectors(F0, cols)
    if rel:
        rel = minimalize_generators(rel, module=F0)
    return PresentedModule(F0, rel, "cokernel")


def quotient_ring(I: Ideal) -> PresentedModule:
    """``R/I`` as the cokernel of the row of generators of ``I``."""
    return presentation_of(Cokernel(I.module, I.vectors()))


def shift_module(M: Any, a: Any) -> PresentedModule:
    """``M(-a)``: every degree of ``M`` raised by ``a``.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> regularity(shift_module(Ideal(R, R.gens()), 2))
    3
    """
    M = presentation_of(M)
    a = valid_multidegree(a, M.ring.arity)
    F0 = M.ambient.shift(a)
    emb = None
    if M.embedding is not None:
        G = M.embedding[0].module.shift(a) if M.embedding else None
        emb = [ModuleVector._raw(G, g.terms) for g in M.embedding]
    return PresentedModule(F0, [ModuleVector._raw(F0, r.terms) for r in M.relations], M.kind, emb)


def direct_sum(M: Any, N: Any) -> PresentedModule:
    """``M + N`` with block-diagonal relations."""
    M, N = presentation_of(M), presentation_of(N)
    F0 = M.ambient.direct_sum(N.ambient)
    off = M.ambient.rank
    rel = [ModuleVector._raw(F0, dict(r.terms)) for r in M.relations]
    rel += [ModuleVector._raw(F0, {(k + off, m): c for (k, m), c in r.terms.items()}) for r in N.relations]
    return PresentedModule(F0, rel, "cokernel")


# ----- resolutions -----
@dataclass
class Resolution:
    """A graded free resolution ``... -> F_2 -> F_1 -> F_0``.

    Attributes
    ----------
    ring : PolynomialRing
    modules : list of FreeModule
        ``F_0, ..., F_c``
    differentials : list of list of ModuleVector
        ``differentials[i - 1]`` holds the columns of ``d_i: F_i -> F_{i-1}``,
        column ``j`` being the image of the ``j``-th basis vector of ``F_i``
    minimal : bool
    """

    ring: PolynomialRing
    modules: List[FreeModule]
    differentials: List[List[ModuleVector]]
    minimal: bool = True

    @property
    def length(self) -> Optional[int]:
        return len(self.modules) - 1 if self.modules else None

    def twists(self, i: int) -> Tuple[Multidegree, ...]:
        return self.modules[i].twists if i < len(self.modules) else ()

    def ranks(self) -> List[int]:
        return [F.rank for F in self.modules]

    def check_complex(self) -> bool:
        """``d_{i-1} d_i = 0`` exactly; raises `ResolutionError` otherwise."""
        F = self.ring.field
        for i in range(1, len(self.differentials)):
            lower, upper = self.differentials[i - 1], self.differentials[i]
            for col in upper:
                image: Dict = {}
                for k, entry in enumerate(col.entries()):
                    if entry:
                        image = add_terms(F, image, lower[k].scale(entry).terms)
                if image:
                    raise ResolutionError(f"d_{i} d_{i + 1} != 0 on column {col}")
        return True

    def check_minimal(self) -> bool:
        """No differential has a nonzero constant entry."""
        one = self.ring.one()
        for i, cols in enumerate(self.differentials, start=1):
            for col in cols:
                if any(m == one for (_, m) in col.terms):
                    raise ResolutionError(f"d_{i} has a unit entry in column {col}")
        return True

    def check_exact(self) -> bool:
        """Syzygies of every ``d_i`` lie in the span of the columns of ``d_{i+1}``."""
        for i, cols in enumerate(self.differentials, start=1):
            syz = syzygies(cols, RESOLUTION_ORDER, degrees=self.modules[i].twists, module=self.modules[i - 1])
            upper = self.differentials[i] if i < len(self.differentials) else []
            G = buchberger(upper, RESOLUTION_ORDER, module=self.modules[i])
            for s in syz.syzygies:
                if not G.contains(s):
                    raise ResolutionError(f"syzygy {s} of d_{i} is not in the image of d_{i + 1}")
        return True

    def verify(self, exact: bool = False) -> bool:
        self.check_complex()
        if self.minimal:
            self.check_minimal()
        if exact:
            self.check_exact()
        return True


@cache(level=20)
def minimal_free_resolution(M: Any) -> Resolution:
    """Minimal graded free resolution by iterated syzygies.

    Each step computes generators of the syzygies of the current
    differential, then removes unit entries by Gaussian pivoting (leftmost
    column first, then first row); a pivot also deletes the redundant column
    of the previous differential.

    Parameters
    ----------
    M : Ideal, Submodule, Cokernel or PresentedModule

    Returns
    -------
    Resolution
        The empty resolution for the zero module

    Raises
    ------
    ResolutionError
        If the construction does not stop within ``n + 2`` steps or a
        structural check fails

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> F = minimal_free_resolution(Ideal(R, [x**2, x*y]))
    >>> [F.twists(i) for i in range(2)]
    [((2,), (2,)), ((3,),)]
    """
    M = presentation_of(M)
    ring = M.ring
    if M.is_zero():
        return Resolution(ring, [], [])
    one = ring.one()
    field_ = ring.field

    modules: List[FreeModule] = [M.ambient]
    diffs: List[List[Dict]] = []
    current = [r.terms for r in M.relations]
    current_twists = [r.degree() for r in M.relations]

    step = 1
    while current:
        if step > ring.ngens + 2:
            raise ResolutionError(f"resolution did not terminate after {step - 1} steps")
        F_prev = modules[-1]
        cols = [ModuleVector._raw(F_prev, c) for c in current]
        syz = syzygies(cols, RESOLUTION_ORDER, degrees=current_twists, module=F_prev)
        nxt = [s.terms for s in syz.syzygies]
        nxt_twists = [s.degree() for s in syz.syzygies]
        while True:
            hit = _find_unit(nxt, one)
            if hit is None:
                break
            r, c = hit
            nxt = _pivot(nxt, r, c, field_, one)
            del nxt_twists[c]
            current = _drop_column(current, r)
            del current_twists[r]
            keep = [j for j, col in enumerate(nxt) if col]
            nxt = [nxt[j] for j in keep]
            nxt_twists = [nxt_twists[j] for j in keep]
        F_cur = FreeModule(ring, current_twists)
        modules.append(F_cur)
        diffs.append(current)
        logger.debug("resolution step %d: rank %d", step, F_cur.rank)
        current, current_twists = nxt, nxt_twists
        step += 1

    differentials = [
        [ModuleVector._raw(modules[i], c) for c in cols] for i, cols in enumerate(diffs)
    ]
    res = Resolution(ring, modules, differentials, minimal=True)
    res.verify()
    return res


# ----- Betti tables -----
@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}``.

    Attributes
    ----------
    entries : dict
        ``(i, j) -> beta_{i,j}`` with ``j`` a multidegree; zero entries omitted
    arity : int
        Grading arity of the ring
    standard : bool
        Whether the ring is standard graded
    """

    entries: Dict[Tuple[int, Multidegree], int]
    arity: int = 1
    standard: bool = True

    def __getitem__(self, key: Tuple[int, Any]) -> int:
        i, j = key
        if isinstance(j, int):
            j = (j,)
        return self.entries.get((i, tuple(j)), 0)

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def length(self) -> Optional[int]:
        return max((i for i, _ in self.entries), default=None)

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def degrees(self, i: int) -> List[Multidegree]:
        return sorted(j for (k, j) in self.entries if k == i)

    def top_degree(self, i: int) -> ExtendedInt:
        """``t_0(F_i)``: the largest total degree of a generator of ``F_i``."""
        return max((sum(j) for j in self.degrees(i)), default=NEG_INF)

    def to_text(self) -> str:
        """Staircase layout: rows ``j - i``, columns ``i``."""
        if self.arity != 1:
            return "\n".join(
                f"{i}: {tuple(j)} -> {b}" for (i, j), b in sorted(self.entries.items())
            )
        if not self.entries:
            return "total: 0"
        n_cols = self.length + 1
        rows = sorted({j[0] - i for (i, j) in self.entries})
        header = ["", *[str(i) for i in range(n_cols)]]
        lines = [["total:", *[str(self.total(i)) for i in range(n_cols)]]]
        for r in range(rows[0], rows[-1] + 1):
            cells = [self.entries.get((i, (r + i,)), 0) for i in range(n_cols)]
            lines.append([f"{r}:", *[str(b) if b else "." for b in cells]])
        widths = [max(len(row[k]) for row in [header] + lines) for k in range(n_cols + 1)]
        out = [" ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in [header] + lines]
        return "\n".join(line.rstrip() for line in out)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "entries": [[i, list(j), b] for (i, j), b in sorted(self.entries.items())],
            "length": self.length,
        }

    def __str__(self) -> str:
        return self.to_text()


def betti_table(R: Resolution) -> BettiTable:
    """Read ``beta_{i,j}`` off the twists of a minimal resolution.

    Raises
    ------
    ParameterError
        If ``R`` is not minimal
    """
    if not R.minimal:
        raise ParameterError("Betti numbers are read from minimal resolutions only")
    entries: Dict[Tuple[int, Multidegree], int] = {}
    for i, F in enumerate(R.modules):
        for t in F.twists:
            entries[(i, t)] = entries.get((i, t), 0) + 1
    return BettiTable(entries, R.ring.arity, R.ring.is_standard)


@dataclass
class ResolutionSummary:
    """Invariants read off a minimal resolution over a standard graded ring."""

    n: int
    pd: Optional[int]
    depth: Optional[int]
    t0_per_step: List[ExtendedInt]
    reg2: ExtendedInt
    reg3: ExtendedInt

    @property
    def t0(self) -> ExtendedInt:
        return self.t0_per_step[0] if self.t0_per_step else NEG_INF

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {
                "pd": self.pd,
                "depth": self.depth,
                "t0_per_step": self.t0_per_step,
                "reg2": self.reg2,
                "reg3": self.reg3,
            }
        )


def summary(B: BettiTable, n: int) -> ResolutionSummary:
    """``pd``, ``depth``, ``t_0(F_i)``, ``reg_2`` and ``reg_3`` of a Betti table.

    ``reg_3 = max_i (t_0(F_i) - i)``; ``depth = n - pd``; ``reg_2`` takes the
    same maximum over ``i = 0..n - depth``.

    Raises
    ------
    ParameterError
        For a bigraded or non-standard table

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> B = betti_table(minimal_free_resolution(Ideal(R, [x**2, x*y])))
    >>> summary(B, 2).reg3
    2
    """
    if B.arity != 1 or not B.standard:
        raise ParameterError("summary() needs a standard Z-graded Betti table; use rees.reg_bidirectional")
    if B.is_zero():
        return ResolutionSummary(n, None, None, [], NEG_INF, NEG_INF)
    pd = B.length
    depth = n - pd
    t0 = [B.top_degree(i) for i in range(pd + 1)]
    reg3 = max(t - i for i, t in enumerate(t0) if not is_neg_inf(t))
    reg2 = max(t0[i] - i for i in range(0, n - depth + 1) if not is_neg_inf(t0[i]))
    return ResolutionSummary(n, pd, depth, t0, reg2, reg3)


def regularity(M: Any) -> ExtendedInt:
    """``reg_3`` of a module through its minimal resolution.

    The zero module has regularity ``NEG_INF``; a `RegkitWarning` flags it.
    """
    M = presentation_of(M)
    if M.is_zero():
        warnings.warn("regularity of the zero module is -inf", RegkitWarning, stacklevel=2)
        return NEG_INF
    return summary(betti_table(minimal_free_resolution(M)), M.ring.ngens).reg3


def is_linear_resolution(R: Resolution) -> bool:
    """True when every nonzero entry of every ``d_i`` has degree one."""
    for i, cols in enumerate(R.differentials, start=1):
        rows = R.modules[i - 1]
        for col, t in zip(cols, R.modules[i].twists):
            for (k, _) in col.terms:
                if sum(degree_sub(t, rows.twists[k])) != 1:
                    return False
    return True


# ----- ideal constructions -----
def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return I + J


def intersect_ideals(I: Ideal, J: Ideal) -> Ideal:
    """``I`` intersected with ``J`` from the syzygies of their joint generators.

    Every syzygy ``(u, w)`` of ``(f_1, ..., f_r, g_1, ..., g_s)`` gives the
    element ``sum u_i f_i`` of the intersection, and these generate it.
    """
    I, J = I.minimal(), J.minimal()
    I._check(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    gens = I.vectors() + J.vectors()
    syz = syzygies(gens, RESOLUTION_ORDER, module=I.module)
    r = len(I)
    out = []
    for s in syz.syzygies:
        entries = s.entries()
        f = None
        for u, g in zip(entries[:r], I.generators):
            if u:
                f = u * g if f is None else f + u * g
        if f is not None and f:
            out.append(f)
    return Ideal(ring, out).minimal()


@dataclass
class SESReport:
    """Regularity bounds along ``0 -> N -> M -> L -> 0``."""

    reg_n: ExtendedInt
    reg_m: ExtendedInt
    reg_l: ExtendedInt
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {"reg_n": self.reg_n, "reg_m": self.reg_m, "reg_l": self.reg_l, "checks": self.checks}
        )


def ses_regularity_bounds(N: Any, M: Any, L: Any) -> SESReport:
    """Check the three regularity inequalities of a short exact sequence.

    For ``0 -> N -> M -> L -> 0``:
    ``reg N <= max(reg M, reg L + 1)``, ``reg M <= max(reg N, reg L)`` and
    ``reg L <= max(reg M, reg N - 1)``. Exactness is the caller's
    responsibility.
    """
    rn, rm, rl = regularity(N), regularity(M), regularity(L)
    checks = {
        "reg_n": rn <= max(rm, rl + 1),
        "reg_m": rm <= max(rn, rl),
        "reg_l": rl <= max(rm, rn - 1),
    }
    return SESReport(rn, rm, rl, checks)
