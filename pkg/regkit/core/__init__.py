#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Core rings, orders, modules and the Groebner engine"""

from .field import *  # noqa: F401,F403
from .ring import *  # noqa: F401,F403
from .order import *  # noqa: F401,F403
from .poly import *  # noqa: F401,F403
from .module import *  # noqa: F401,F403
from .linalg import *  # noqa: F401,F403
from .slices import *  # noqa: F401,F403
from .groebner import *  # noqa: F401,F403
from .ideal import *  # noqa: F401,F403
