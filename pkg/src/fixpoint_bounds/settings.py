"""Runtime configuration read from ``FIXPOINT_*`` environment variables."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings
from pydantic_settings import SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide defaults; CLI flags override them per invocation."""

    model_config = SettingsConfigDict(
        env_prefix="FIXPOINT_", env_file=".env", extra="ignore", frozen=True
    )

    log_level: str = Field("WARNING", description="Logging level for the package")
    log_file: Path | None = Field(None, description="Optional log file")
    rich_console: bool = Field(True, description="Use Rich for console logging")

    sample_points: int = Field(
        3, ge=1, description="Random rational points for the evaluation pre-check"
    )
    sample_seed: int = Field(20240, description="Seed for evaluation sample points")

    search_workers: int = Field(1, ge=1, description="Processes used by the search")
    search_bound: int = Field(1, ge=1, description="Default weight bound for search")

    mutation_seed: int = Field(7, description="Seed for the mutation drill")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the cached settings instance."""
    return Settings()
