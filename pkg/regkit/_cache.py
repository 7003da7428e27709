#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Function caching"""

import os
from typing import Any, Callable, TypeVar

from decorator import FunctionMaker
from joblib import Memory

_F = TypeVar("_F", bound=Callable[..., Any])


def _decorator_apply(dec, func):
    return FunctionMaker.create(
        func,
        "return decfunc(%(shortsignature)s)",
        dict(decfunc=dec(func)),
        __wrapped__=func,
    )


class CacheManager(object):
    """Wrap `joblib.Memory` with a level filter.

    Heavier results are cached only when the configured level is at least
    the level a function declares:

        - 10: Groebner bases
        - 20: minimal free resolutions
        - 30: regularity sequences of powers
    """

    def __init__(self, *args: Any, **kwargs: Any):
        level = kwargs.pop("level", 10)
        self.memory: Memory = Memory(*args, **kwargs)
        self.level: int = level

    def __call__(self, level: int) -> Callable[[_F], _F]:
        """Cache with an explicitly defined level.

        Example usage:

        @cache(level=20)
        def minimal_free_resolution(module):
            ...
        """

        def wrapper(function):
            if self.memory.location is not None and self.level >= level:
                return _decorator_apply(self.memory.cache, function)
            else:
                return function

        return wrapper

    def clear(self, *args: Any, **kwargs: Any) -> None:
        return self.memory.clear(*args, **kwargs)

    def reduce_size(self, *args: Any, **kwargs: Any) -> None:
        return self.memory.reduce_size(*args, **kwargs)


# Instantiate the cache from the environment
cache: CacheManager = CacheManager(
    os.environ.get("REGKIT_CACHE_DIR", None),
    verbose=int(os.environ.get("REGKIT_CACHE_VERBOSE", 0)),
    level=int(os.environ.get("REGKIT_CACHE_LEVEL", 10)),
)
