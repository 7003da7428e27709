#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Multigraded polynomial rings
============================

Monomials are plain exponent tuples. A `PolynomialRing` fixes the field, the
variable names and the (multi)degree of each variable; it is the only place
where degrees of monomials are computed.

.. autosummary::
    :toctree: generated/

    PolynomialRing
    monomial_mul
    monomial_divides
    monomial_quotient
    monomial_lcm
    monomial_gcd
"""

import re
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .._typing import Monomial, Multidegree
from ..util.exceptions import ParameterError
from ..util.utils import valid_multidegree
from .field import QQ, FieldSpec

__all__ = [
    "PolynomialRing",
    "monomial_mul",
    "monomial_divides",
    "monomial_quotient",
    "monomial_lcm",
    "monomial_gcd",
    "degree_add",
    "degree_sub",
]

_EXPONENT_LIMIT = 2**31 - 1
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    m = tuple(x + y for x, y in zip(a, b))
    if m and max(m) > _EXPONENT_LIMIT:
        raise ParameterError("exponent overflow: exponents are bounded by 2**31 - 1")
    return m


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    """``b / a``; the caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def degree_add(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(x + y for x, y in zip(a, b))


def degree_sub(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(x - y for x, y in zip(a, b))


class PolynomialRing(object):
    """A positively (multi)graded polynomial ring over an exact field.

    Parameters
    ----------
    field : FieldSpec
    names : sequence of str
        Variable names, unique identifiers
    degrees : sequence of multidegrees, optional
        Degree of each variable, all of the same arity (1 or 2).
        Defaults to the standard grading ``deg x_i = 1``.

    Raises
    ------
    ParameterError
        If names repeat, a degree has a negative entry or zero total degree,
        or arities disagree

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y', 'Y'], [(1, 0), (1, 0), (2, 1)])
    >>> R.monomial_degree((1, 0, 1))
    (3, 1)
    """

    def __init__(
        self,
        field: FieldSpec = QQ,
        names: Sequence[str] = ("x", "y"),
        degrees: Optional[Sequence[Sequence[int]]] = None,
    ):
        names = tuple(names)
        if not names:
            raise ParameterError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise ParameterError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ParameterError(f"variable names {names} are not unique")

        if degrees is None:
            degrees = [(1,)] * len(names)
        degrees = list(degrees)
        if len(degrees) != len(names):
            raise ParameterError("one degree per variable is required")
        arity = len(degrees[0]) if not isinstance(degrees[0], int) else 1
        if arity not in (1, 2):
            raise ParameterError(f"grading arity {arity} is not supported")
        degrees = tuple(valid_multidegree(d, arity) for d in degrees)
        for name, d in zip(names, degrees):
            if min(d) < 0 or sum(d) <= 0:
                raise ParameterError(
                    f"deg {name} = {d} must be non-negative with positive total degree"
                )

        self.field = field
        self.names: Tuple[str, ...] = names
        self.degrees: Tuple[Multidegree, ...] = degrees
        self.arity: int = arity
        self.ngens: int = len(names)
        self.weights: Tuple[int, ...] = tuple(sum(d) for d in degrees)
        self.index = {name: i for i, name in enumerate(names)}
        self._key = (field, names, degrees)

    # ----- identity -----
    def __eq__(self, other) -> bool:
        return isinstance(other, PolynomialRing) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"PolynomialRing({self})"

    def __str__(self) -> str:
        text = f"{self.field}[{','.join(self.names)}]"
        if not self.is_standard:
            text += "".join(
                f" deg {n} = {_degree_text(d)}" for n, d in zip(self.names, self.degrees)
            )
        return text

    def __reduce__(self):
        return (PolynomialRing, (self.field, self.names, self.degrees))

    @property
    def is_standard(self) -> bool:
        """Standard Z-grading: every variable of degree 1."""
        return self.arity == 1 and all(d == (1,) for d in self.degrees)

    @property
    def zero_degree(self) -> Multidegree:
        return (0,) * self.arity

    # ----- monomials -----
    def one(self) -> Monomial:
        return (0,) * self.ngens

    def variable(self, i: int) -> Monomial:
        return tuple(1 if j == i else 0 for j in range(self.ngens))

    def monomial_degree(self, m: Monomial) -> Multidegree:
        deg = [0] * self.arity
        for e, d in zip(m, self.degrees):
            if e:
                for c in range(self.arity):
                    deg[c] += e * d[c]
        return tuple(deg)

    def total(self, degree: Multidegree) -> int:
        return sum(degree)

    def monomials_of_degree(self, degree: Multidegree) -> List[Monomial]:
        """All monomials of a given multidegree, in decreasing degrevlex order.

        Positivity of the grading bounds every exponent, so the enumeration
        is finite.
        """
        degree = valid_multidegree(degree, self.arity)
        return list(_monomials_of_degree(self.degrees, degree))

    # ----- derived rings -----
    def gens(self):
        """The variables as `Polynomial` objects."""
        from .poly import Polynomial

        return tuple(
            Polynomial(self, {self.variable(i): self.field.one}) for i in range(self.ngens)
        )

    def regrade(self, degrees: Sequence[Sequence[int]]) -> "PolynomialRing":
        return PolynomialRing(self.field, self.names, degrees)

    def change_field(self, field: FieldSpec) -> "PolynomialRing":
        return PolynomialRing(field, self.names, self.degrees)


def _degree_text(d: Multidegree) -> str:
    if len(d) == 1:
        return str(d[0])
    return "(" + ",".join(str(c) for c in d) + ")"


@lru_cache(maxsize=4096)
def _monomials_of_degree(
    degrees: Tuple[Multidegree, ...], target: Multidegree
) -> Tuple[Monomial, ...]:
    if min(target) < 0:
        return ()
    n = len(degrees)
    out: List[Monomial] = []

    def rec(i: int, remaining: List[int], prefix: List[int]) -> Iterator[None]:
        if i == n:
            if not any(remaining):
                out.append(tuple(prefix))
            return
        d = degrees[i]
        bound = min(r // c for r, c in zip(remaining, d) if c > 0)
        for e in range(bound, -1, -1):
            rec(i + 1, [r - e * c for r, c in zip(remaining, d)], prefix + [e])

    rec(0, list(target), [])
    weights = [sum(d) for d in degrees]
    out.sort(
        key=lambda m: (sum(e * w for e, w in zip(m, weights)), tuple(-e for e in reversed(m))),
        reverse=True,
    )
    return tuple(out)
