"""Application settings and configuration."""

import os
from pathlib import Path

from dotenv import load_dotenv


def _load_env_once():
    """Load environment variables once."""
    env_file = os.getenv("ENV_FILE", ".env")
    load_dotenv(env_file, override=False)  # Don't override existing env vars


# Load environment on module import
_load_env_once()


# Variables that failed to parse; reported by Settings.validate()
_INVALID_ENV: dict[str, str] = {}


def _env_int(name: str, default: int) -> int:
    """Read an integer environment variable, falling back to default on bad text."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        _INVALID_ENV[name] = raw
        return default


class Settings:
    """Application settings loaded from environment variables."""

    ENVIRONMENT: str = os.getenv("ENVIRONMENT", "development")

    # Worker processes for sharded enumeration
    JOBS: int = _env_int("ALTERFOLD_JOBS", 1)

    # Logging
    LOGS_DIR: str = os.getenv("ALTERFOLD_LOGS_DIR", "logs")
    LOG_TO_FILE: bool = os.getenv("ALTERFOLD_LOG_TO_FILE", "true").lower() == "true"

    # Data
    DEFAULT_DATASET: str = os.getenv("ALTERFOLD_DATASET", "ising3")
    DATA_DIR: Path = Path(__file__).resolve().parent.parent / "catdata" / "data"

    # Enumeration caps and report sizes
    MAX_HOM_TUPLES: int = _env_int("ALTERFOLD_MAX_HOM_TUPLES", 10**8)
    MAX_FAILURES_REPORTED: int = _env_int("ALTERFOLD_MAX_FAILURES", 10)
    SPOT_CHECK_SAMPLE: int = _env_int("ALTERFOLD_SPOT_CHECK_SAMPLE", 200)
    DEFAULT_SEED: int = _env_int("ALTERFOLD_SEED", 1)
    MAX_ISOMORPHISM_VERTICES: int = 9
    GRAM_MAX_CIRCLES: int = 6

    # Published equation totals for the Ising dataset, keyed by move type
    PACHNER_CHECKSUM = {(1, 5): 2044, (2, 4): 30464, (3, 3): 50709}

    # Decimal digits shown next to exact values
    DISPLAY_DIGITS: int = 12

    @classmethod
    def validate(cls) -> None:
        """Validate that numeric settings parsed and are in range."""
        for name, raw in _INVALID_ENV.items():
            raise ValueError(f"{name} must be an integer, got {raw!r}")
        if cls.JOBS < 1:
            raise ValueError(
                f"ALTERFOLD_JOBS must be at least 1, got {cls.JOBS}. "
                "Unset it to run serially."
            )
        if cls.MAX_HOM_TUPLES < 1:
            raise ValueError("ALTERFOLD_MAX_HOM_TUPLES must be positive")
        if cls.MAX_FAILURES_REPORTED < 0:
            raise ValueError("ALTERFOLD_MAX_FAILURES must be non-negative")
        if cls.SPOT_CHECK_SAMPLE < 0:
            raise ValueError("ALTERFOLD_SPOT_CHECK_SAMPLE must be non-negative")
