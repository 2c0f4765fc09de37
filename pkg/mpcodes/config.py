"""
Configuration management for MPC Codes.
Uses pydantic-settings for environment variable handling.
"""

from pydantic_settings import BaseSettings
from typing import Optional
from functools import lru_cache
from pathlib import Path


APP_DIR = Path(__file__).resolve().parent


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Application
    app_name: str = "MPC Codes"
    app_version: str = "0.1.0"
    debug: bool = False
    log_level: str = "INFO"

    # Finite fields
    max_field_order: int = 2 ** 20  # table-based arithmetic limit

    # Brute-force enumeration
    enumeration_cap: int = 2 ** 24  # codewords
    module_enumeration_cap: int = 2 ** 22  # ring-module elements for D_i
    enumeration_chunk: int = 65536  # messages per vectorised chunk

    # Simulation
    default_seed: int = 2024
    workers: int = 1

    # Files
    specs_dir: str = str(APP_DIR / "specs")
    run_log_path: Optional[str] = None  # JSONL run records, disabled when unset

    class Config:
        env_prefix = "MPC_"
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
