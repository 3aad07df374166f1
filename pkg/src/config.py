from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from pathlib import Path
from typing import Optional


class Settings(BaseSettings):
    # Special functions
    bessel_rel_eps: float = Field(default=1e-18, gt=0, lt=1)
    bessel_max_terms: int = Field(default=600, ge=16)

    # Front-chain solver
    chain_truncation: int = Field(default=200, ge=5)
    chain_tail_tol: float = Field(default=1e-10, gt=0)
    chain_max_truncation: int = Field(default=3200, ge=5)

    # Monte Carlo
    sim_height: int = Field(default=100_000, ge=1)
    sim_replicas: int = Field(default=32, ge=2)
    sim_seed: int = Field(default=42, ge=0)
    sim_burn_in_fraction: float = Field(default=0.01, ge=0, lt=1)
    sim_workers: Optional[int] = Field(default=None, ge=1)
    sim_audit_interval: int = Field(default=10_000, ge=1)

    # Sweeps
    sweep_points: int = Field(default=50, ge=2)

    # Output
    output_dir: Path = Path("data")
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_prefix="FPP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
