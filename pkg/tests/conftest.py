"""Pytest configuration and shared fixtures."""

import json

import numpy as np
import pytest

from bazlab import Workbench


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    """Keep settings from the calling shell out of the tests."""
    for name in ("BAZLAB_ORDER", "BAZLAB_QUAD_POINTS", "BAZLAB_THREADS", "BAZLAB_LOG"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def bench():
    return Workbench(order=32, threads=1)


@pytest.fixture
def write_spec(tmp_path):
    """Write a spec document to a temporary file and return its path."""

    def _write(document, name="spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return _write


@pytest.fixture
def point_mass_spec():
    """Spec document of the B_1(alpha) member whose h has a single atom at t."""

    def _spec(alpha, t=0.0, **extra):
        spec = {"alphas": [alpha], "h": {"measure": {"atoms": [{"t": t, "lam": 1.0}]}}}
        spec.update(extra)
        return spec

    return _spec
