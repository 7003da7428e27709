#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact coefficient fields
========================

Coefficients are stored raw inside polynomials: a reduced
`fractions.Fraction` over the rationals, and the least non-negative residue
(an ``int``) over a prime field. `FieldSpec` knows how to combine raw values;
`FieldValue` wraps a raw value together with its field for the public
arithmetic API.

.. autosummary::
    :toctree: generated/

    FieldSpec
    FieldValue
    QQ
    Fp
    field_arith
    field_inverse
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

from .._typing import Coefficient
from ..util.exceptions import DivisionByZeroError, FieldError, ParameterError

__all__ = ["FieldSpec", "FieldValue", "QQ", "Fp", "field_arith", "field_inverse"]

_RATIONALS = "rationals"
_PRIME_FIELD = "prime_field"


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the bases 2, 3, 5, 7 cover n < 3.2e9
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: the rationals or a prime field.

    Parameters
    ----------
    kind : {'rationals', 'prime_field'}
    characteristic : int
        ``0`` for the rationals, a prime ``p < 2**31`` otherwise

    Examples
    --------
    >>> F = Fp(7)
    >>> F.mul(3, 5)
    1
    >>> QQ.add(QQ(1, 2), QQ(1, 3))
    Fraction(5, 6)
    """

    kind: str = _RATIONALS
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == _RATIONALS:
            if self.characteristic != 0:
                raise ParameterError("the rationals have characteristic 0")
        elif self.kind == _PRIME_FIELD:
            p = self.characteristic
            if not isinstance(p, int) or p >= 2**31 or not _is_prime(p):
                raise ParameterError(f"characteristic={p!r} must be a prime below 2**31")
        else:
            raise ParameterError(f"unknown field kind={self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == _PRIME_FIELD

    @property
    def zero(self) -> Coefficient:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Coefficient:
        return 1 if self.is_prime_field else Fraction(1)

    def __call__(self, numerator: Any, denominator: Any = 1) -> Coefficient:
        """Convert an integer, fraction or numeric string into a raw coefficient."""
        if isinstance(numerator, FieldValue):
            if numerator.field != self:
                raise FieldError(f"{numerator!r} does not belong to {self}")
            numerator = numerator.value
        if isinstance(numerator, str):
            numerator = Fraction(numerator)
        value = Fraction(numerator) / Fraction(denominator) if denominator != 1 else Fraction(numerator)
        return self.canon(value)

    def canon(self, value: Any) -> Coefficient:
        """Canonical form: reduced fraction, or least non-negative residue."""
        if self.is_prime_field:
            p = self.characteristic
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise DivisionByZeroError(f"{value} has no image in {self}")
                return value.numerator * pow(value.denominator, -1, p) % p
            return int(value) % p
        return Fraction(value)

    def is_zero(self, a: Coefficient) -> bool:
        return a == 0

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.is_prime_field:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.is_prime_field:
            return (a - b) % self.characteristic
        return a - b

    def neg(self, a: Coefficient) -> Coefficient:
        if self.is_prime_field:
            return -a % self.characteristic
        return -a

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.is_prime_field:
            return a * b % self.characteristic
        return a * b

    def inv(self, a: Coefficient) -> Coefficient:
        if a == 0:
            raise DivisionByZeroError(f"0 has no inverse in {self}")
        if self.is_prime_field:
            return pow(a, -1, self.characteristic)
        return Fraction(1) / a

    def div(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.mul(a, self.inv(b))

    def primitive_scale(self, coefficients: Iterable[Coefficient]) -> Coefficient:
        """Scale factor clearing denominators and content of rational data.

        Multiplying every coefficient by the returned factor yields integers
        with gcd 1 and a positive first entry. Over a prime field the factor is 1.
        """
        coefficients = list(coefficients)
        if self.is_prime_field or not coefficients:
            return self.one
        from math import gcd

        lcm = 1
        for c in coefficients:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        content = 0
        for c in coefficients:
            content = gcd(content, int(c * lcm))
        scale = Fraction(lcm, content)
        if coefficients[0] < 0:
            scale = -scale
        return scale

    def render(self, a: Coefficient) -> str:
        """Text form: ``a/b`` over QQ, residue integer over F_p."""
        return str(a)

    def element(self, value: Any) -> "FieldValue":
        return FieldValue(self, self(value))

    def __str__(self) -> str:
        if self.is_prime_field:
            return f"Fp({self.characteristic})"
        return "QQ"


QQ = FieldSpec(_RATIONALS, 0)


def Fp(p: int) -> FieldSpec:
    """The prime field with ``p`` elements."""
    return FieldSpec(_PRIME_FIELD, p)


@dataclass(frozen=True)
class FieldValue:
    """An immutable field element in canonical form."""

    field: FieldSpec
    value: Coefficient

    def _check(self, other: "FieldValue") -> None:
        if not isinstance(other, FieldValue) or other.field != self.field:
            raise FieldError(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        self._check(other)
        return FieldValue(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldValue(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return FieldValue(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return FieldValue(self.field, self.field.div(self.value, other.value))

    def __neg__(self):
        return FieldValue(self.field, self.field.neg(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __str__(self) -> str:
        return self.field.render(self.value)


_OPS = {
    "add": FieldValue.__add__,
    "sub": FieldValue.__sub__,
    "mul": FieldValue.__mul__,
    "div": FieldValue.__truediv__,
}


def field_arith(op: str, a: FieldValue, b: FieldValue) -> FieldValue:
    """Exact field arithmetic.

    Parameters
    ----------
    op : {'add', 'sub', 'mul', 'div'}
    a, b : FieldValue
        Elements of the same field

    Returns
    -------
    FieldValue
        The canonical result

    Raises
    ------
    DivisionByZeroError
        If ``op == 'div'`` and ``b`` is zero
    FieldError
        If ``a`` and ``b`` belong to different fields

    Examples
    --------
    >>> field_arith('add', QQ.element('1/2'), QQ.element('1/3')).value
    Fraction(5, 6)
    """
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ParameterError(f"unknown field operation op={op!r}")


def field_inverse(a: FieldValue) -> FieldValue:
    """Multiplicative inverse; raises `DivisionByZeroError` on zero."""
    return FieldValue(a.field, a.field.inv(a.value))
