from pathlib import Path
from typing import Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    LIECOH_THREADS: int = 0
    LIECOH_FAST_RANK: bool = False
    LIECOH_LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    ENVIRONMENT: Literal["development", "production"] = "development"

    # Guardrails
    LIECOH_MAX_COCHAIN_BASIS: int = Field(2_000_000, gt=0)
    LIECOH_MAX_SUBSETS: int = Field(1_000_000, gt=0)

    # Where externally supplied catalog data (e.g. L_{9,41}.json) is looked up
    LIECOH_EXTERNAL_DIR: Optional[Path] = None

    @field_validator("LIECOH_THREADS")
    @classmethod
    def threads_non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("LIECOH_THREADS must be >= 0 (0 = sequential)")
        return v

    @field_validator("LIECOH_EXTERNAL_DIR", mode="before")
    @classmethod
    def blank_dir_is_unset(cls, v: Optional[str]) -> Optional[str]:
        if isinstance(v, str) and not v.strip():
            return None
        return v

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")


settings = Settings()
