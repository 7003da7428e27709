#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Rings, modules and regularity
=============================

Rings, ideals and modules
-------------------------
.. autosummary::
    :toctree: generated/

    PolynomialRing
    Ideal
    FreeModule
    ModuleVector
    QQ
    Fp

Regularity
----------
.. autosummary::
    :toctree: generated/

    minimal_free_resolution
    betti_table
    regularity
    koszul_summary
    reg_via_duality
"""

import lazy_loader as lazy

from .version import version as __version__
from .version import show_versions

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submodules=["core", "resolve", "koszul", "asymptotics", "rees", "script", "util", "cli"],
    submod_attrs={
        "core.field": ["QQ", "Fp", "FieldValue"],
        "core.ring": ["PolynomialRing"],
        "core.poly": ["Polynomial"],
        "core.module": ["FreeModule", "ModuleVector"],
        "core.order": ["MonomialOrder", "DEGREVLEX", "LEX", "block_order"],
        "core.ideal": ["Ideal"],
        "core.groebner": ["buchberger", "normal_form", "syzygies", "eliminate"],
        "resolve": [
            "Submodule",
            "Cokernel",
            "presentation_of",
            "quotient_ring",
            "shift_module",
            "minimal_free_resolution",
            "betti_table",
            "summary",
            "regularity",
        ],
        "koszul": ["koszul_homology", "koszul_summary", "reg_via_duality"],
        "asymptotics": ["nonstandard_ring", "rho", "ideal_power", "power_module", "reg_power_sequence", "fit_linear_law"],
        "rees": ["rees_ideal", "bigraded_resolution", "reg_bidirectional", "linear_powers_test"],
        "script": ["parse_session", "run"],
        "util.exceptions": ["RegkitError", "ParameterError", "CrossCheckError", "RegkitWarning"],
        "util.utils": ["NEG_INF"],
    },
)

__all__ = list(__all__) + ["__version__", "show_versions"]
