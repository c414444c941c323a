from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

from tropical_flags.cartan import named_type

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def A1():
    return named_type("A1")


@pytest.fixture(scope="session")
def A2():
    return named_type("A2")


@pytest.fixture(scope="session")
def A3():
    return named_type("A3")


@pytest.fixture(scope="session")
def D4():
    return named_type("D4")
