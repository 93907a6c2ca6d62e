"""Pytest configuration and shared fixtures for the diagmon test suite.

Enumerated monoids are built once per session; the configuration singleton is
reset around every test so limit overrides never leak between tests.
"""

import random
from pathlib import Path

import pytest

from diagmon.core.enumeration import close
from diagmon.core.families import FamilyKind, generating_set, make_family
from diagmon.core.settings import Settings
from diagmon.utils.tool_utils import ToolUtils

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

FIXTURES_DIR = Path(ToolUtils.fixtures_path())


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def enumerate_family(kind: FamilyKind, k: int, m: int | None = None):
    """Close the generating set of a family."""
    return close(generating_set(make_family(kind, k, m)), k=k)


# ---------------------------------------------------------------------------
# Session-scoped fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def fixtures_dir():
    """Return the directory of the shipped table fixtures."""
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def pmod2_k3():
    return enumerate_family(FamilyKind.PMOD, 3, 2)


@pytest.fixture(scope="session")
def pmod2_k4():
    return enumerate_family(FamilyKind.PMOD, 4, 2)


@pytest.fixture(scope="session")
def mod2_k4():
    return enumerate_family(FamilyKind.MOD, 4, 2)


@pytest.fixture(scope="session")
def jones_k4():
    return enumerate_family(FamilyKind.JONES, 4)


@pytest.fixture(scope="session")
def sym_k3():
    return enumerate_family(FamilyKind.SYMMETRIC, 3)


# ---------------------------------------------------------------------------
# Function-scoped fixtures
# ---------------------------------------------------------------------------


@pytest.fixture()
def rng():
    """A seeded random source so property tests are repeatable."""
    return random.Random(20240601)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Reload the default configuration before and after each test."""
    monkeypatch.delenv("DIAGMON_FORMAT", raising=False)
    Settings.reset()
    yield
    Settings.reset()
