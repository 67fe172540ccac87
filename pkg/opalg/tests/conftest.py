# opalg/tests/conftest.py

import os

import pytest
from hypothesis import HealthCheck, settings

# Word keys are lru_cached; the first examples of a run are slower.
settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", parent=settings.get_profile("default"), max_examples=10_000)
settings.load_profile(os.environ.get("OPALG_HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def trace_path(tmp_path):
    return tmp_path / "runs.jsonl"
