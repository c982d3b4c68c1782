# SPDX-License-Identifier: MIT
"""Configuration management for icmbound.

This module handles:
- Logging setup (stderr, so stdout stays reserved for command output)
- Environment-driven settings for the certified pi enclosure and grid workers
"""

import logging
import os
import sys
from functools import lru_cache

from pydantic import Field, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import ConfigurationError

# ---------- Logging configuration ----------
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
logging.basicConfig(
    level=LOG_LEVEL,
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger("icmbound")


MIN_PI_BITS = 16
"""Below this the enclosure is too coarse to be worth certifying anything with."""


class Settings(BaseSettings):
    """Runtime settings, read from ``ICMBOUND_*`` environment variables (or ``.env``)."""

    pi_bits: int = Field(
        default=64,
        ge=MIN_PI_BITS,
        description="Initial precision (bits) of the pi enclosure used by the Minkowski floor",
    )
    pi_max_bits: int = Field(
        default=4096,
        ge=MIN_PI_BITS,
        description="Precision cap for automatic escalation; past it the larger floor candidate is returned",
    )
    threads: int = Field(default=1, ge=1, description="Default worker threads for sweep and verify grids")

    model_config = SettingsConfigDict(
        env_prefix="ICMBOUND_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @model_validator(mode="after")
    def check_precision_order(self) -> "Settings":
        if self.pi_max_bits < self.pi_bits:
            raise ValueError(f"pi_max_bits ({self.pi_max_bits}) must be >= pi_bits ({self.pi_bits})")
        return self


@lru_cache
def get_settings() -> Settings:
    """Get the settings (cached singleton).

    Raises:
        ConfigurationError: If an ``ICMBOUND_*`` variable holds an invalid value.
    """
    try:
        return Settings()
    except ValidationError as e:
        raise ConfigurationError(f"Invalid icmbound configuration: {e}") from e
