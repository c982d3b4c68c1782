# SPDX-License-Identifier: MIT
"""Shared pytest fixtures for icmbound tests."""

import pytest

from icmbound.config import get_settings


@pytest.fixture(autouse=True)
def clear_settings_cache():
    """Settings are a cached singleton; tests that patch ICMBOUND_* need a fresh read."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
