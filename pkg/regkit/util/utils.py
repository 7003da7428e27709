#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Utility functions"""

import math
import os
from typing import Any, Optional, Sequence, Tuple

from .exceptions import ParameterError

__all__ = [
    "NEG_INF",
    "is_neg_inf",
    "valid_int",
    "valid_multidegree",
    "format_value",
    "env_seed",
    "env_n_jobs",
]

#: Sentinel for the regularity of the zero module and for empty sup's.
NEG_INF = -math.inf


def is_neg_inf(value: Any) -> bool:
    """Check whether ``value`` is the ``NEG_INF`` sentinel."""
    return isinstance(value, float) and value == NEG_INF


def valid_int(x: Any, *, name: str = "value", minimum: Optional[int] = None) -> int:
    """Ensure that an input value is integer-typed.

    Parameters
    ----------
    x : number
        A scalar value to validate
    name : str
        Parameter name used in error messages
    minimum : int or None
        If given, values below ``minimum`` are rejected

    Returns
    -------
    x_int : int

    Raises
    ------
    ParameterError
        If ``x`` is not integral, or is below ``minimum``
    """
    if isinstance(x, bool) or not isinstance(x, int):
        try:
            if int(x) != x:
                raise ValueError
            x = int(x)
        except (TypeError, ValueError):
            raise ParameterError(f"{name}={x!r} must be an integer")
    if minimum is not None and x < minimum:
        raise ParameterError(f"{name}={x} must be at least {minimum}")
    return x


def valid_multidegree(d: Any, arity: int) -> Tuple[int, ...]:
    """Coerce an integer or integer sequence into a multidegree of given arity."""
    if isinstance(d, int) and not isinstance(d, bool):
        d = (d,)
    if not isinstance(d, Sequence) or isinstance(d, str):
        raise ParameterError(f"multidegree {d!r} is not an integer vector")
    if len(d) != arity:
        raise ParameterError(f"multidegree {tuple(d)} does not have arity {arity}")
    return tuple(valid_int(c, name="degree") for c in d)


def format_value(value: Any) -> Any:
    """Make a computed value JSON-safe.

    The ``NEG_INF`` sentinel becomes the string ``'-inf'`` and tuples become
    lists; everything else passes through.
    """
    if is_neg_inf(value):
        return "-inf"
    if isinstance(value, tuple):
        return [format_value(v) for v in value]
    if isinstance(value, list):
        return [format_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): format_value(v) for k, v in value.items()}
    return value


def env_seed(default: int = 0) -> int:
    """Seed for randomized constructions, from ``REGKIT_SEED``."""
    return valid_int(os.environ.get("REGKIT_SEED", default), name="REGKIT_SEED")


def env_n_jobs(default: int = 1) -> int:
    """Default worker count, from ``REGKIT_N_JOBS``."""
    return valid_int(os.environ.get("REGKIT_N_JOBS", default), name="REGKIT_N_JOBS")
