#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Shared type aliases"""

from fractions import Fraction
from typing import Tuple, Union

from typing_extensions import TypeAlias

#: Exponent vector indexed by the ring variables
Monomial: TypeAlias = Tuple[int, ...]

#: Degree vector of arity 1 or 2
Multidegree: TypeAlias = Tuple[int, ...]

#: A module term: (basis index, monomial)
Term: TypeAlias = Tuple[int, Monomial]

#: Raw canonical coefficient: ``Fraction`` over QQ, ``int`` residue over F_p
Coefficient: TypeAlias = Union[int, Fraction]

#: Integer or the ``NEG_INF`` sentinel
ExtendedInt: TypeAlias = Union[int, float]
