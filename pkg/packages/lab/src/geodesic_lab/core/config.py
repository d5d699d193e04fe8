from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LogFormat = Literal["json", "console"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="GEODESIC_LAB_",
        env_file=".env",
        extra="ignore",
    )

    # default directory for CLI artifacts (documents, CSV, SVG, suite reports)
    out_dir: Path = Field(default=Path("out"))
    run_root: Path = Field(default=Path("_runs"))
    log_level: str = Field(default="INFO")
    log_format: LogFormat = Field(default="console")
    jobs: int = Field(default=1, ge=1)
    distance_cache_size: int = Field(default=256, ge=0)


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    return Settings()
