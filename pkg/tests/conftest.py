"""Global test fixtures for the shannonlab test suite."""

import os
from typing import Generator

import pytest

from shannonlab.core.config import get_settings
from shannonlab.sampling import BandlimitedTestFunction, SignalKind
from shannonlab.windows import SamplingConfig


@pytest.fixture(autouse=True)
def clean_settings() -> Generator[None, None, None]:
    """Remove SHANNONLAB_ environment variables and the cached settings.

    Tests that patch the environment see a fresh Settings instance.
    """
    env_vars = [k for k in os.environ if k.startswith("SHANNONLAB_")]
    original_values = {k: os.environ.pop(k) for k in env_vars}
    get_settings.cache_clear()
    yield
    os.environ.update(original_values)
    get_settings.cache_clear()


@pytest.fixture
def config() -> SamplingConfig:
    """Small sampling configuration with L = 32."""
    return SamplingConfig(N=16, oversampling=1.0)


@pytest.fixture
def unit_sinc() -> BandlimitedTestFunction:
    """Unit-norm sinc with bandwidth 16."""
    return BandlimitedTestFunction(kind=SignalKind.UNIT_SINC, N=16)


@pytest.fixture
def shifted_pair() -> BandlimitedTestFunction:
    """Unit-norm shifted sinc pair with bandwidth 16."""
    return BandlimitedTestFunction(kind=SignalKind.SHIFTED_PAIR, N=16)
