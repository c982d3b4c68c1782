# SPDX-License-Identifier: MIT
"""Unit tests for configuration management."""

import os

import pytest

from icmbound.config import MIN_PI_BITS, get_settings
from icmbound.exceptions import ConfigurationError


@pytest.mark.unit
class TestSettingsDefaults:
    """Test get_settings() with no ICMBOUND_* variables set."""

    def test_defaults(self, mocker):
        mocker.patch.dict(os.environ, {}, clear=True)

        settings = get_settings()

        assert settings.pi_bits == 64
        assert settings.pi_max_bits == 4096
        assert settings.threads == 1

    def test_settings_are_cached(self, mocker):
        mocker.patch.dict(os.environ, {"ICMBOUND_THREADS": "2"})
        first = get_settings()

        mocker.patch.dict(os.environ, {"ICMBOUND_THREADS": "7"})

        assert get_settings() is first
        assert get_settings().threads == 2


@pytest.mark.unit
class TestSettingsFromEnvironment:
    """Test ICMBOUND_* overrides."""

    def test_env_overrides(self, mocker):
        mocker.patch.dict(
            os.environ,
            {"ICMBOUND_PI_BITS": "128", "ICMBOUND_PI_MAX_BITS": "1024", "ICMBOUND_THREADS": "4"},
        )

        settings = get_settings()

        assert (settings.pi_bits, settings.pi_max_bits, settings.threads) == (128, 1024, 4)

    def test_env_names_are_case_insensitive(self, mocker):
        mocker.patch.dict(os.environ, {"icmbound_threads": "3"})

        assert get_settings().threads == 3


@pytest.mark.unit
class TestSettingsErrorCases:
    """Invalid values surface as ConfigurationError, never a raw ValidationError."""

    def test_pi_bits_below_minimum(self, mocker):
        mocker.patch.dict(os.environ, {"ICMBOUND_PI_BITS": str(MIN_PI_BITS - 1)})

        with pytest.raises(ConfigurationError, match="Invalid icmbound configuration"):
            get_settings()

    def test_max_bits_below_initial_bits(self, mocker):
        mocker.patch.dict(os.environ, {"ICMBOUND_PI_BITS": "256", "ICMBOUND_PI_MAX_BITS": "128"})

        with pytest.raises(ConfigurationError, match="pi_max_bits"):
            get_settings()

    def test_zero_threads(self, mocker):
        mocker.patch.dict(os.environ, {"ICMBOUND_THREADS": "0"})

        with pytest.raises(ConfigurationError):
            get_settings()

    def test_non_integer_value(self, mocker):
        mocker.patch.dict(os.environ, {"ICMBOUND_PI_BITS": "lots"})

        with pytest.raises(ConfigurationError):
            get_settings()
