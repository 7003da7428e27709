#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Monomial orders
===============

Orders are realized as sort keys: a larger key means a larger term. Every
order here is global (the constant monomial is smallest), total and
multiplicative.

.. autosummary::
    :toctree: generated/

    MonomialOrder
    Cmp
    monomial_compare
    DEGREVLEX
    LEX
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Callable, Optional, Sequence, Tuple, Union

from .._typing import Monomial, Multidegree, Term
from ..util.exceptions import ParameterError, RingMismatchError
from .ring import PolynomialRing, monomial_mul

__all__ = ["MonomialOrder", "Cmp", "monomial_compare", "DEGREVLEX", "LEX", "block_order"]

_KINDS = ("degrevlex", "lex", "block")
_MODULE_KINDS = ("pot", "top", "schreyer")


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _degrevlex(m: Monomial, weights: Sequence[int]) -> Tuple[int, ...]:
    return (sum(e * w for e, w in zip(m, weights)),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a polynomial ring, extended to free modules.

    Parameters
    ----------
    kind : {'degrevlex', 'lex', 'block'}
        Order on monomials. Degree comparisons use the total of each
        variable's multidegree as its weight.
    block : int
        For ``kind='block'``, the number of leading variables forming the
        first (eliminated) block; each block is ordered by degrevlex.
    module : {'pot', 'top', 'schreyer'}
        Extension to terms ``m * e_k``: position over term, term over
        position, or the order induced by a previous module.
    schreyer : tuple, optional
        For ``module='schreyer'``: the leading terms ``(k_j, m_j)`` of the
        images of the basis vectors ``e_j`` in the previous module.
    base : MonomialOrder, optional
        For ``module='schreyer'``: the order of the previous module.
    base_twists : tuple, optional
        For ``module='schreyer'``: twists of the previous module.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> monomial_compare(DEGREVLEX, R, (2, 0), (1, 1))
    <Cmp.GT: 1>
    """

    kind: str = "degrevlex"
    block: int = 0
    module: str = "pot"
    schreyer: Optional[Tuple[Term, ...]] = None
    base: Optional["MonomialOrder"] = None
    base_twists: Optional[Tuple[Multidegree, ...]] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown monomial order kind={self.kind!r}")
        if self.module not in _MODULE_KINDS:
            raise ParameterError(f"unknown module order extension module={self.module!r}")
        if self.kind == "block" and self.block < 1:
            raise ParameterError(f"block order needs block >= 1, got {self.block}")
        if self.module == "schreyer" and (self.schreyer is None or self.base is None):
            raise ParameterError("a Schreyer order needs leading terms and a base order")

    # ----- monomials -----
    def monomial_key(self, ring: PolynomialRing) -> Callable[[Monomial], Any]:
        """Sort key on monomials of ``ring``."""
        weights = ring.weights
        if self.kind == "lex":
            return tuple
        if self.kind == "degrevlex":
            return lambda m: _degrevlex(m, weights)
        k = self.block
        if k >= ring.ngens:
            raise ParameterError(f"block={k} must leave variables in {ring}")
        w1, w2 = weights[:k], weights[k:]
        return lambda m: (_degrevlex(m[:k], w1), _degrevlex(m[k:], w2))

    # ----- module terms -----
    def term_key(
        self, ring: PolynomialRing, twists: Sequence[Multidegree]
    ) -> Callable[[Term], Any]:
        """Sort key on terms ``(k, m)`` of a free module with given twists."""
        mkey = self.monomial_key(ring)
        if self.module == "pot":
            return lambda t: (-t[0], mkey(t[1]))
        if self.module == "top":
            weights = ring.weights
            shift = [sum(d) for d in twists]
            return lambda t: (
                sum(e * w for e, w in zip(t[1], weights)) + shift[t[0]],
                mkey(t[1]),
                -t[0],
            )
        base_key = self.base.term_key(ring, self.base_twists or ())
        leads = self.schreyer

        def schreyer_key(t: Term):
            k, m = leads[t[0]]
            return (base_key((k, monomial_mul(t[1], m))), -t[0])

        return schreyer_key

    @classmethod
    def schreyer_induced(
        cls,
        base: "MonomialOrder",
        base_twists: Sequence[Multidegree],
        leads: Sequence[Term],
    ) -> "MonomialOrder":
        """The order on a syzygy module induced by leading terms of generators."""
        return cls(
            kind=base.kind,
            block=base.block,
            module="schreyer",
            schreyer=tuple(leads),
            base=base,
            base_twists=tuple(base_twists),
        )

    def __str__(self) -> str:
        name = self.kind if self.kind != "block" else f"block({self.block})"
        return f"{name}/{self.module}"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(k: int, module: str = "pot") -> MonomialOrder:
    """Elimination order for the first ``k`` variables."""
    return MonomialOrder("block", block=k, module=module)


def monomial_compare(
    order: MonomialOrder,
    ring: PolynomialRing,
    a: Union[Monomial, Term],
    b: Union[Monomial, Term],
    twists: Optional[Sequence[Multidegree]] = None,
) -> Cmp:
    """Compare two monomials, or two module terms ``(k, m)``.

    Raises
    ------
    RingMismatchError
        If the exponent vectors do not fit ``ring``
    """
    is_term = len(a) == 2 and isinstance(a[1], tuple)
    if is_term:
        ma, mb = a[1], b[1]
    else:
        ma, mb = a, b
    if len(ma) != ring.ngens or len(mb) != ring.ngens:
        raise RingMismatchError(f"monomials {ma}, {mb} do not belong to {ring}")
    if is_term:
        if twists is None:
            twists = [ring.zero_degree] * (max(a[0], b[0]) + 1)
        key = order.term_key(ring, twists)
    else:
        key = order.monomial_key(ring)
    ka, kb = key(a), key(b)
    if ka > kb:
        return Cmp.GT
    if ka < kb:
        return Cmp.LT
    return Cmp.EQ
