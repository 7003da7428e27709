#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Version info"""

import importlib
import sys
from types import ModuleType
from typing import Optional

short_version = "0.3"
version = "0.3.0"


def __get_mod_version(modname: str) -> Optional[str]:
    try:
        if modname in sys.modules:
            mod = sys.modules[modname]
        else:
            mod = importlib.import_module(modname)
        try:
            return str(mod.__version__)
        except AttributeError:
            return "installed, no version number available"
    except ImportError:
        return None


def show_versions() -> None:
    """Return the version information for all regkit dependencies."""
    core_deps = [
        "numpy",
        "joblib",
        "decorator",
        "lazy_loader",
        "typing_extensions",
        "dotenv",
    ]

    extra_deps = [
        "pytest",
        "pytest_cov",
        "hypothesis",
        "numpydoc",
        "sphinx",
    ]

    print("INSTALLED VERSIONS")
    print("------------------")
    print(f"python: {sys.version}\n")
    print(f"regkit: {version}\n")
    for dep in core_deps:
        print("{}: {}".format(dep, __get_mod_version(dep)))
    print("")
    for dep in extra_deps:
        print("{}: {}".format(dep, __get_mod_version(dep)))
