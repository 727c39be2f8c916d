# src/core/config.py

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Centralizes every tunable knob of the toolkit.
    Loads the .env file at the repository root automatically.

    Use:
        from src.core.config import settings
        settings.euler_oracle_max_edges
    """

    # === Brute-force oracles ===
    euler_oracle_max_edges: int = 9
    star_oracle_max_edges: int = 7
    mrd_oracle_max_subsets: int = 1_000_000
    coloring_oracle_max_vertices: int = 12

    # === Resource guards ===
    mrd_max_vimw: int = 7
    lifetime_warning: int = 1_000_000

    # === Benchmarks ===
    bench_default_jobs: int = 1

    # === Misc ===
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )


settings = Settings()
