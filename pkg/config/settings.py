"""
Toolkit settings.
Values are read from ACGAME_* environment variables or a local .env file.
"""

from functools import lru_cache

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings shared by the engine, the analysis layer and the CLI."""

    model_config = SettingsConfigDict(
        env_prefix="ACGAME_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Engine
    max_citations: int = Field(2**31 - 1, ge=1, description="Largest citation count a paper may carry")

    # Analysis
    default_horizon: int = Field(1000, ge=1, description="Years simulated for overtaking verdicts")
    burn_in_fraction: float = Field(0.5, gt=0, lt=1, description="Share of the series ignored before the tail")
    max_workers: int = Field(4, ge=1, description="Threads used by the unstable-set search")

    # Calibration
    min_group_size: int = Field(1, ge=1, description="Smallest bin emitted by the median curves")
    max_reject_fraction: float = Field(0.10, ge=0, le=1, description="Malformed-row share that aborts ingestion")
    min_year: int = Field(1800, description="Earliest accepted publication year")
    max_year: int = Field(2100, description="Latest accepted publication year")

    # CLI
    log_level: str = Field("INFO", description="Root log level for command-line runs")
    verify_seed: int = Field(20240101, description="Seed for the randomized verification suites")

    @model_validator(mode="after")
    def _check_year_bounds(self) -> "Settings":
        if self.min_year > self.max_year:
            raise ValueError(f"min_year ({self.min_year}) is after max_year ({self.max_year})")
        return self


@lru_cache
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
