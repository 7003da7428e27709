#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact linear algebra
====================

Rows are sparse maps ``column -> coefficient``. Over a prime field ranks are
computed by dense row reduction on ``numpy`` int64 arrays; over the
rationals by sparse elimination on `fractions.Fraction` values.

.. autosummary::
    :toctree: generated/

    rank
    EchelonBasis
"""

import logging
from typing import Dict, Hashable, Iterable, List, Sequence

import numpy as np

from .._typing import Coefficient
from .field import FieldSpec

__all__ = ["rank", "EchelonBasis"]

logger = logging.getLogger(__name__)

Row = Dict[Hashable, Coefficient]


def _rank_mod_p(rows: Sequence[Row], p: int) -> int:
    columns = sorted({c for row in rows for c in row}, key=repr)
    if not columns:
        return 0
    index = {c: j for j, c in enumerate(columns)}
    A = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, a in row.items():
            A[i, index[c]] = a % p

    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        # entries < p < 2**31, so products stay inside int64
        factors = A[r + 1 :, c].copy()
        if factors.any():
            A[r + 1 :] = (A[r + 1 :] - np.outer(factors, A[r])) % p
        r += 1
    return r


def rank(rows: Iterable[Row], field: FieldSpec) -> int:
    """Rank of the matrix whose rows are sparse maps.

    Parameters
    ----------
    rows : iterable of dict
        Each row maps a hashable column label to a raw coefficient
    field : FieldSpec

    Returns
    -------
    int

    Examples
    --------
    >>> rank([{0: 1, 1: 2}, {0: 2, 1: 4}], QQ)
    1
    """
    rows = [row for row in rows if row]
    if not rows:
        return 0
    logger.debug("rank of %d rows over %s", len(rows), field)
    if field.is_prime_field:
        return _rank_mod_p(rows, field.characteristic)
    basis = EchelonBasis(field)
    for row in rows:
        basis.add(row)
    return len(basis)


class EchelonBasis(object):
    """Incrementally maintained reduced echelon basis of a row space.

    Every stored row has a pivot column on which it has coefficient 1 and
    on which every other stored row vanishes. With ``key`` given, the pivot
    of a new row is its largest column under ``key``.
    """

    def __init__(self, field: FieldSpec, key=None):
        self.field = field
        self.key = key
        self.rows: Dict[Hashable, Row] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def _pivot(self, row: Row) -> Hashable:
        if self.key is None:
            return min(row, key=repr)
        return max(row, key=self.key)

    def reduce(self, row: Row) -> Row:
        """Remainder of ``row`` after elimination against the basis."""
        F = self.field
        row = dict(row)
        changed = True
        while changed and row:
            changed = False
            for c in list(row):
                if c in self.rows and c in row:
                    a = row[c]
                    for col, b in self.rows[c].items():
                        s = F.sub(row.get(col, 0), F.mul(a, b))
                        if s == 0:
                            row.pop(col, None)
                        else:
                            row[col] = s
                    changed = True
        return row

    def add(self, row: Row) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        rem = self.reduce(row)
        if not rem:
            return False
        F = self.field
        pivot = self._pivot(rem)
        inv = F.inv(rem[pivot])
        rem = {c: F.mul(a, inv) for c, a in rem.items()}
        # keep earlier rows free of the new pivot
        for c, other in self.rows.items():
            a = other.get(pivot)
            if a:
                for col, b in rem.items():
                    s = F.sub(other.get(col, 0), F.mul(a, b))
                    if s == 0:
                        other.pop(col, None)
                    else:
                        other[col] = s
        self.rows[pivot] = rem
        return True

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    def pivots(self) -> List[Hashable]:
        return list(self.rows)


def rank_of_matrix(matrix: Sequence[Sequence[Coefficient]], field: FieldSpec) -> int:
    """Rank of a dense matrix given as nested sequences."""
    return rank(({j: a for j, a in enumerate(r) if a != 0} for r in matrix), field)
