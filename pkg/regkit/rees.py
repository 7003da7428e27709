#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Rees algebras
=============

.. autosummary::
    :toctree: generated/

    ReesPresentation
    rees_ideal
    rees_degreewise_check
    BigradedBetti
    bigraded_resolution
    reg_bidirectional
    LinearPowersReport
    linear_powers_test
    strand_regularities
"""

import logging
import warnings
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ._typing import ExtendedInt, Multidegree
from .asymptotics import reg_power_sequence
from .core.groebner import eliminate
from .core.ideal import Ideal
from .core.linalg import rank
from .core.module import FreeModule
from .core.poly import Polynomial
from .core.ring import PolynomialRing
from .core.slices import quotient_dimension, slice_basis, slice_rows
from .resolve import (
    PresentedModule,
    Resolution,
    betti_table,
    is_linear_resolution,
    minimal_free_resolution,
    presentation_of,
    quotient_ring,
)
from .util.exceptions import CrossCheckError, GroebnerError, ParameterError, RegkitWarning
from .util.utils import NEG_INF, format_value, is_neg_inf, valid_int

__all__ = [
    "ReesPresentation",
    "rees_ideal",
    "rees_degreewise_check",
    "BigradedBetti",
    "bigraded_resolution",
    "reg_bidirectional",
    "LinearPowersReport",
    "linear_powers_test",
    "strand_regularities",
]

logger = logging.getLogger(__name__)


@dataclass
class ReesPresentation:
    """``Rees(I) = B / J`` for ``B = K[x_1..x_n, Y_1..Y_g]``.

    Attributes
    ----------
    ring : PolynomialRing
        ``B`` bigraded by ``deg x = (deg x, 0)`` and ``deg Y_i = (d_i, 1)``,
        or ``deg Y_i = (0, 1)`` when normalized
    generators : list of Polynomial
        Minimal bihomogeneous generators of ``J``
    source : Ideal
        The ideal ``I`` with its minimal generators ``f_1..f_g``
    normalized : bool
    d : int or None
        The common generator degree when normalized
    groebner : list of Polynomial
        Reduced Groebner basis of ``J`` from the elimination
    """

    ring: PolynomialRing
    generators: List[Polynomial]
    source: Ideal
    normalized: bool = False
    d: Optional[int] = None
    groebner: List[Polynomial] = field(default_factory=list, repr=False)

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)

    @property
    def x_count(self) -> int:
        return self.source.ring.ngens

    @property
    def y_count(self) -> int:
        return len(self.source)

    def module(self) -> PresentedModule:
        """``B / J`` as a presented module."""
        return quotient_ring(self.ideal)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": str(self.ring),
            "generators": [str(g) for g in self.generators],
            "normalized": self.normalized,
            "d": self.d,
        }


def _fresh_names(taken, prefix: str, count: int) -> List[str]:
    for p in (prefix, prefix + "_", "T", "W"):
        names = [f"{p}{i + 1}" for i in range(count)]
        if not set(names) & set(taken):
            return names
    raise ParameterError(f"cannot name {count} Rees variables next to {sorted(taken)}")


def rees_ideal(I: Ideal, normalized: Optional[bool] = None) -> ReesPresentation:
    """Defining ideal of the Rees algebra by elimination.

    ``J = (Y_i - t f_i : i)`` intersected with ``K[x, Y]``, computed in
    ``K[t, x, Y]`` graded by ``deg t = 1``, ``deg x = deg x`` and
    ``deg Y_i = d_i + 1`` so that every ``Y_i - t f_i`` is homogeneous. The
    result is re-graded into the bigraded ring ``B`` and must be
    bihomogeneous there; substituting ``Y_i -> f_i`` must kill it.

    Parameters
    ----------
    I : Ideal
        Over a Z-graded ring; non-minimal generators are re-minimalized with
        a `RegkitWarning`
    normalized : bool, optional
        Use ``deg Y_i = (0, 1)``; defaults to whether ``I`` is equigenerated

    Raises
    ------
    ParameterError
        For the zero ideal, a bigraded base ring, or ``normalized=True`` on a
        non-equigenerated ideal
    GroebnerError
        If an eliminated generator fails the bihomogeneity or substitution check

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> [str(g) for g in rees_ideal(Ideal(R, [x, y])).generators]
    ['y*Y1 - x*Y2']
    """
    R = I.ring
    if R.arity != 1:
        raise ParameterError("Rees algebras are built over Z-graded rings")
    if I.is_zero():
        raise ParameterError("the Rees algebra of the zero ideal is not defined here")
    if not I.is_minimal():
        warnings.warn(f"re-minimalizing the generators of {I}", RegkitWarning, stacklevel=2)
    I = I.minimal()
    f = I.generators
    d_list = [g.degree()[0] for g in f]
    equi = len(set(d_list)) == 1
    if normalized is None:
        normalized = equi
    if normalized and not equi:
        raise ParameterError(f"{I} is not equigenerated; the normalized grading is undefined")

    ynames = _fresh_names(R.names, "Y", len(f))
    tname = "_t"
    work = PolynomialRing(
        R.field,
        [tname, *R.names, *ynames],
        [1, *[d[0] for d in R.degrees], *[d + 1 for d in d_list]],
    )
    if normalized:
        ydeg = [(0, 1)] * len(f)
    else:
        ydeg = [(d, 1) for d in d_list]
    B = PolynomialRing(R.field, [*R.names, *ynames], [(d[0], 0) for d in R.degrees] + ydeg)

    t = work.gens()[0]
    graph = []
    for i, g in enumerate(f):
        Y = work.gens()[1 + R.ngens + i]
        graph.append(Y - t * g.change_ring(work))
    basis = eliminate(graph, [*R.names, *ynames], target=B)
    for g in basis:
        if not g.is_homogeneous():
            raise GroebnerError(f"Rees generator {g} is not bihomogeneous")

    images = {R.ngens + i: g for i, g in enumerate(f)}
    for g in basis:
        if not g.substitute(images).is_zero():
            raise GroebnerError(f"Rees generator {g} does not vanish under Y_i -> f_i")

    gens = Ideal(B, basis).minimal().generators if basis else []
    logger.debug("Rees ideal of %s: %d generators", I, len(gens))
    return ReesPresentation(B, gens, I, normalized, d_list[0] if normalized else None, basis)


def rees_degreewise_check(P: ReesPresentation, i_max: int = 6, v_max: int = 4) -> Dict[Tuple[int, int], int]:
    """Compare ``dim Rees_(i, v)`` with the matching piece of ``I^v``.

    The ``(i, v)`` piece of ``B / J`` must have the dimension of ``(I^v)_e``
    with ``e = i + v d`` in the normalized grading and ``e = i`` otherwise.

    Returns
    -------
    dict
        ``(i, v) -> dim`` over ``0 <= i <= i_max``, ``0 <= v <= v_max``

    Raises
    ------
    CrossCheckError
        On the first mismatch
    """
    i_max = valid_int(i_max, name="i_max", minimum=0)
    v_max = valid_int(v_max, name="v_max", minimum=0)
    R = P.source.ring
    F = FreeModule.cyclic(P.ring)
    rel = P.ideal.vectors()
    out = {}
    for v in range(v_max + 1):
        power = P.source.power(v) if v else None
        for i in range(i_max + 1):
            e = i + v * P.d if P.normalized else i
            lhs = quotient_dimension(F, rel, (i, v))
            if power is None:
                rhs = len(slice_basis(FreeModule.cyclic(R), (e,)))
            else:
                rhs = rank(slice_rows(power.vectors(), (e,)), R.field)
            if lhs != rhs:
                raise CrossCheckError(f"dim Rees_({i},{v}) = {lhs} but dim (I^{v})_{e} = {rhs}")
            out[(i, v)] = lhs
    return out


@dataclass
class BigradedBetti:
    """Bigraded Betti numbers with the row maxima ``v_i`` and ``w_i``."""

    entries: Dict[Tuple[int, Multidegree], int]
    v: List[ExtendedInt]
    w: List[ExtendedInt]

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {
                "entries": [[i, list(j), b] for (i, j), b in sorted(self.entries.items())],
                "v": self.v,
                "w": self.w,
            }
        )


def bigraded_resolution(P: Any) -> Tuple[Resolution, BigradedBetti]:
    """Minimal bigraded resolution of ``B / J`` (or of any bigraded module).

    Raises
    ------
    ParameterError
        If the module is not bigraded

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> _, B = bigraded_resolution(rees_ideal(Ideal(R, R.gens())))
    >>> B.v, B.w
    ([0, 1], [0, 1])
    """
    M = P.module() if isinstance(P, ReesPresentation) else presentation_of(P)
    if M.ring.arity != 2:
        raise ParameterError(f"{M.ring} is not bigraded")
    res = minimal_free_resolution(M)
    table = betti_table(res)
    length = table.length if table.length is not None else -1
    v = [max((j[0] for j in table.degrees(i)), default=NEG_INF) for i in range(length + 1)]
    w = [max((j[1] for j in table.degrees(i)), default=NEG_INF) for i in range(length + 1)]
    return res, BigradedBetti(dict(table.entries), v, w)


def reg_bidirectional(B: BigradedBetti, n: int, m: int) -> Tuple[ExtendedInt, ExtendedInt]:
    """``reg_(1,0) = max_{i <= n} (v_i - i)`` and ``reg_(0,1) = max_{i <= m} (w_i - i)``.

    Examples
    --------
    >>> reg_bidirectional(BigradedBetti({}, [0, 1], [0, 1]), 2, 2)
    (0, 0)
    """
    def top(values, bound):
        found = [x - i for i, x in enumerate(values[: bound + 1]) if not is_neg_inf(x)]
        return max(found, default=NEG_INF)

    return top(B.v, n), top(B.w, m)


@dataclass
class LinearPowersReport:
    """Outcome of the linear-powers criterion for an equigenerated ideal.

    Attributes
    ----------
    reg10, reg01 : int
        Regularities of the normalized Rees algebra in the two directions
    d, d0 : int
        Generator degree of ``I`` and of ``M``
    sequence : list of (v, reg I^v M)
    witness_v : int or None
        Smallest ``v`` in the budget with ``reg I^v M = v d + d0 + reg10``
    linear : dict
        ``v -> `` whether the minimal resolution of ``I^v M`` is linear
    """

    reg10: ExtendedInt
    reg01: ExtendedInt
    d: int
    d0: int
    sequence: List[Tuple[int, ExtendedInt]]
    witness_v: Optional[int]
    linear: Dict[int, bool] = field(default_factory=dict)

    @property
    def linear_powers(self) -> bool:
        return self.reg10 == 0

    @property
    def inconclusive(self) -> bool:
        return self.witness_v is None

    def bound(self, v: int) -> ExtendedInt:
        return v * self.d + self.d0 + self.reg10

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {
                "reg10": self.reg10,
                "reg01": self.reg01,
                "linear_powers": self.linear_powers,
                "d": self.d,
                "d0": self.d0,
                "sequence": [[v, r] for v, r in self.sequence],
                "bound": [[v, self.bound(v)] for v, _ in self.sequence],
                "witness_v": self.witness_v,
                "inconclusive": self.inconclusive,
                "linear_resolution": {str(v): flag for v, flag in sorted(self.linear.items())},
            }
        )


def linear_powers_test(
    I: Ideal, M: Any = None, budget: int = 5, n_jobs: Optional[int] = None
) -> LinearPowersReport:
    """Decide whether ``I`` has linear powers from its Rees algebra.

    ``reg I^v <= v d + reg_(1,0) Rees(I)`` is checked for ``v = 1..budget``
    together with a search for a ``v`` attaining equality; ``I`` has linear
    powers exactly when ``reg_(1,0) Rees(I) = 0``.

    Parameters
    ----------
    I : Ideal
        Generated in a single degree ``d``
    M : None
        Only the ring itself is supported as the module
    budget : int
    n_jobs : int, optional

    Raises
    ------
    ParameterError
        If ``I`` is not equigenerated or a module is given
    CrossCheckError
        If the upper bound fails for some ``v``

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> linear_powers_test(Ideal(R, R.gens()), budget=3).linear_powers
    True
    """
    if M is not None:
        raise ParameterError("linear_powers_test supports M = R only")
    budget = valid_int(budget, name="budget", minimum=1)
    d = I.minimal().require_equigenerated()
    P = rees_ideal(I, normalized=True)
    _, table = bigraded_resolution(P)
    reg10, reg01 = reg_bidirectional(table, P.x_count, P.y_count)
    seq = reg_power_sequence(P.source, None, budget, n_jobs)
    report = LinearPowersReport(reg10, reg01, d, 0, seq, None)
    for v, reg in seq:
        if reg > report.bound(v):
            raise CrossCheckError(f"reg(I^{v}) = {reg} exceeds the bound {report.bound(v)}")
        if report.witness_v is None and reg == report.bound(v):
            report.witness_v = v
        report.linear[v] = is_linear_resolution(minimal_free_resolution(P.source.power(v)))
    if report.inconclusive:
        logger.warning("no equality witness for the Rees bound within v <= %d", budget)
    return report


def strand_regularities(I: Ideal, v_max: int = 4, n_jobs: Optional[int] = None) -> List[Tuple[int, ExtendedInt]]:
    """``(v, reg I^v - v d)`` for an equigenerated ``I``.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> strand_regularities(Ideal(R, [x**2, x*y]), 3)
    [(1, 0), (2, 0), (3, 0)]
    """
    d = I.minimal().require_equigenerated()
    return [(v, reg - v * d) for v, reg in reg_power_sequence(I, None, v_max, n_jobs)]
