"""Shared pytest fixtures; puts the app directory on sys.path for flat imports."""

from pathlib import Path
import sys

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from config import get_settings  # noqa: E402
from services.codespec import load_and_build  # noqa: E402
from services.finite_field import field_new  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size enumerations and long simulation sweeps")


@pytest.fixture
def gf16():
    return field_new(2, 4)


@pytest.fixture
def gf8():
    return field_new(2, 3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def nested_gf8():
    """[14,4,7] over GF(8): RS [7,3] > [7,1] with A = [[1,1],[0,1]]."""
    return load_and_build("gf8_nested_rs")


@pytest.fixture
def unit_gf8():
    """[14,3] quasi-cyclic code over GF(8) with A = [1, x^2 + x + 1]."""
    return load_and_build("gf8_unit_s1")


@pytest.fixture
def settings_env(monkeypatch):
    """Set MPC_* variables for one test and rebuild the cached settings."""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"MPC_{key.upper()}", str(value))
        get_settings.cache_clear()
        return get_settings()

    yield apply
    monkeypatch.undo()
    get_settings.cache_clear()
