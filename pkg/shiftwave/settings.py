# shiftwave/settings.py

"""
Process-wide settings read from the environment (and an optional .env file).

Variables:
    SHIFTWAVE_THREADS: Worker threads for seeds, sweep points and refocusing.
    SHIFTWAVE_LOG_LEVEL: Logging level name for the CLI.
    SHIFTWAVE_OUT: Default output directory.
"""

import logging
import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

from shiftwave.core import ConfigError

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    """Environment-derived settings.

    Attributes:
        threads: Worker thread cap (at least 1).
        log_level: Logging level name.
        default_out: Output directory used when ``--out`` is omitted.
    """

    threads: int = 1
    log_level: str = "INFO"
    default_out: str = "runs"

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from the process environment after loading .env."""
        load_dotenv()
        raw_threads = os.getenv("SHIFTWAVE_THREADS", "")
        try:
            threads = int(raw_threads) if raw_threads else (os.cpu_count() or 1)
        except ValueError as e:
            raise ConfigError(f"Invalid SHIFTWAVE_THREADS: {raw_threads!r}") from e
        return cls(
            threads=max(1, threads),
            log_level=os.getenv("SHIFTWAVE_LOG_LEVEL", "INFO").upper(),
            default_out=os.getenv("SHIFTWAVE_OUT", "runs"),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()


def configure_logging(level: str = "") -> None:
    """Install the single CLI log format on the root logger."""
    name = (level or get_settings().log_level).upper()
    if not isinstance(logging.getLevelName(name), int):
        raise ConfigError(f"Invalid log level: {name}")
    logging.basicConfig(level=name, format=LOG_FORMAT, force=True)
