#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Session scripts
===============

.. autosummary::
    :toctree: generated/

    parse_session
    parse_polynomial
    render
    run
    run_file
    summarize
"""

from .parser import *  # noqa: F401,F403
from .runner import *  # noqa: F401,F403
from .report import *  # noqa: F401,F403
