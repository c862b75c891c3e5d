from __future__ import annotations

import os
import pytest
from hypothesis import HealthCheck, settings

from semigraphoids import fixtures
from semigraphoids.semigraphoid import StatementSet, parse_statement_set, semigraphoid_masks

settings.register_profile(
    "repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


@pytest.fixture(scope="session")
def fx() -> fixtures.FixtureSet:
    return fixtures.DEFAULT


@pytest.fixture(scope="session")
def M(fx) -> StatementSet:
    return parse_statement_set(fx.m4, 4)


@pytest.fixture(scope="session")
def G(fx) -> StatementSet:
    return StatementSet.of(5, fixtures.gamma_statement_texts(fx))


@pytest.fixture(scope="session")
def sg4_masks():
    return semigraphoid_masks(4)
