#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Utilities
=========

.. autosummary::
    :toctree: generated/

    valid_int
    valid_multidegree
    format_value
    NEG_INF
"""

from .exceptions import *  # noqa: F401,F403
from .utils import *  # noqa: F401,F403
