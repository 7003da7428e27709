#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Shared fixtures for the regkit test suite"""

import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from regkit import Ideal, PolynomialRing, QQ
from regkit.util.utils import env_seed

settings.register_profile(
    "regkit",
    derandomize=True,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("REGKIT_HYPOTHESIS_PROFILE", "regkit"))


@pytest.fixture
def rng():
    return np.random.default_rng(env_seed())


@pytest.fixture(scope="module")
def R2():
    return PolynomialRing(QQ, ["x", "y"])


@pytest.fixture(scope="module")
def R3():
    return PolynomialRing(QQ, ["x", "y", "z"])


@pytest.fixture(scope="module")
def R4():
    return PolynomialRing(QQ, ["x", "y", "z", "w"])


@pytest.fixture(scope="module")
def twisted_cubic(R4):
    x, y, z, w = R4.gens()
    return Ideal(R4, [x * z - y**2, x * w - y * z, y * w - z**2])

