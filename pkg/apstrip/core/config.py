"""
Runtime settings
"""
import os
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide settings read from APSTRIP_* environment variables"""

    threads: Optional[int] = Field(
        default=None, ge=1, description="Upper bound on worker threads (default: all cores)"
    )
    log_level: str = Field(default="INFO", description="Log level name")
    log_json: bool = Field(default=False, description="Render log events as JSON")

    model_config = SettingsConfigDict(
        env_prefix="APSTRIP_",
        env_file=".env",
        extra="ignore",
        frozen=True,
    )

    @property
    def worker_count(self) -> int:
        """Number of worker threads parallel maps may use"""
        if self.threads is not None:
            return self.threads
        return os.cpu_count() or 1


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
