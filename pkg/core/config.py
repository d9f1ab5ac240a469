"""
config.py  –  Shared constants for the braid toolkit.
Every module imports its defaults from here so a single source of truth is maintained.

Library functions and the command line use DEFAULTS (fixed values, no environment lookups),
so CLI output is a pure function of argv. Harnesses that want overrides call load_settings(),
which reads .env and then the process environment.
"""

from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass, fields
from typing import Optional

from dotenv import load_dotenv

from core.errors import ConfigError

# ─── Environment keys ────────────────────────────────────────
ENV_KEYS = {
    "step_budget":          "BRAID_STEP_BUDGET",
    "density_budget":       "BRAID_DENSITY_BUDGET",
    "candidate_length_cap": "BRAID_CANDIDATE_CAP",
    "sample_size":          "BRAID_SAMPLE_SIZE",
    "suite_trials":         "BRAID_SUITE_TRIALS",
    "seed":                 "BRAID_SEED",
    "workers":              "BRAID_WORKERS",
    "log_level":            "BRAID_LOG_LEVEL",
}

LOG_FORMAT = "[%(name)s] %(levelname)s %(message)s"


@dataclass(frozen=True)
class Settings:
    step_budget: int = 1_000_000        # handle-reduction rewrites before giving up
    density_budget: int = 10_000        # comparator calls per witness search
    candidate_length_cap: int = 4       # longest pool word in witness searches
    sample_size: int = 2                # factors per subgroup sample
    suite_trials: int = 50
    seed: int = 1
    workers: int = 1
    log_level: str = "WARNING"

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "log_level":
                if logging.getLevelName(str(value).upper()) == f"Level {str(value).upper()}":
                    raise ConfigError(f"unknown log level {value!r}")
                continue
            if f.name == "seed":
                continue
            if value < 1:
                raise ConfigError(f"{f.name} must be positive, got {value}")


DEFAULTS = Settings()


def load_settings(env_file: Optional[str] = None) -> Settings:
    """Build Settings from .env / environment, falling back to DEFAULTS per field."""
    load_dotenv(env_file)

    values = {}
    for name, key in ENV_KEYS.items():
        raw = os.getenv(key)
        if raw is None or raw.strip() == "":
            continue
        if name == "log_level":
            values[name] = raw.strip().upper()
            continue
        try:
            values[name] = int(raw)
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {raw!r}") from None
    return Settings(**values)


def configure_logging(level: str = DEFAULTS.log_level) -> None:
    """Route toolkit logs to stderr; stdout is reserved for command results."""
    root = logging.getLogger("core")
    root.setLevel(level.upper())
    if not any(getattr(h, "_braid_handler", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._braid_handler = True
        root.addHandler(handler)
