#!/usr/bin/env python3
"""
Quantum Reading V1.0.0 Configuration
=====================================
Runtime settings, overridable from the environment (prefix QREAD_) or a
local .env file.

Model constants (purity tolerance, eigenvalue floor, bisection bracket) are
NOT here; they live next to the code that owns them.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Version
VERSION = "1.0.0"


class Settings(BaseSettings):
    """Environment-backed settings for the library and the CLI."""

    model_config = SettingsConfigDict(
        env_prefix="QREAD_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = "INFO"
    log_json: bool = False

    # CSV output
    csv_precision: int = Field(default=12, ge=6, le=17)

    # Fock oracle
    oracle_tail_tolerance: float = Field(default=1e-10, gt=0.0)
    oracle_target_tail: float = Field(default=1e-12, gt=0.0)
    oracle_max_cutoff: int = Field(default=400, ge=2)
    oracle_desk_scale_nbar: float = Field(default=5.0, gt=0.0)
    oracle_check_tolerance: float = Field(default=1e-8, gt=0.0)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Cached settings instance."""
    return Settings()
