"""
Project runtime configuration.

All options can be overridden through environment variables in `.env`.
"""
from __future__ import annotations

import os

from dotenv import load_dotenv

load_dotenv()


def _bool(key: str, default: bool) -> bool:
    """Read a boolean value from environment variables."""
    val = os.getenv(key)
    if val is None:
        return default
    return val.strip().lower() in ("1", "true", "yes", "on")


# ============================================================
# Machine profile presets (base defaults, can be overridden below)
# ============================================================
_profile_env = os.getenv("DICTATORLAB_PROFILE", "").strip().lower()
if _profile_env in ("small", "desk", "large"):
    PROFILE = _profile_env
else:
    PROFILE = "desk"

_defaults = {
    "small": dict(size_cap=2**20, workers=2, enum_cap=2000),
    "desk": dict(size_cap=2**24, workers=8, enum_cap=10000),
    "large": dict(size_cap=2**26, workers=16, enum_cap=100000),
}
_profile = _defaults.get(PROFILE, _defaults["desk"])


# ============================================================
# Grid and tolerance settings (explicit env vars take precedence over profile)
# ============================================================
GRID_SIZE_CAP: int = int(os.getenv("DICTATORLAB_SIZE_CAP", str(_profile["size_cap"])))
BOOL_TOL: float = float(os.getenv("DICTATORLAB_BOOL_TOL", "1e-6"))
DEGREE_TOL: float = float(os.getenv("DICTATORLAB_DEGREE_TOL", "1e-10"))
ENUM_CAP: int = int(os.getenv("DICTATORLAB_ENUM_CAP", str(_profile["enum_cap"])))
SUBSET_ENUM_LIMIT: int = int(os.getenv("DICTATORLAB_SUBSET_LIMIT", "200000"))

# Corpus driver
VERIFY_WORKERS: int = int(os.getenv("DICTATORLAB_VERIFY_WORKERS", str(_profile["workers"])))

# Output
LOG_LEVEL: str = os.getenv("DICTATORLAB_LOG_LEVEL", "INFO").strip().upper() or "INFO"
ENABLE_COLOR: bool = _bool("DICTATORLAB_COLOR", True)


def print_config_summary():
    """Print current runtime config summary at startup."""
    import logging

    import psutil

    logger = logging.getLogger("config")
    available_mb = psutil.virtual_memory().available / (1024**2)

    logger.info("=" * 50)
    logger.info("Configuration Summary")
    logger.info(f"Profile: {PROFILE.upper()}")
    logger.info(f"Grid size cap: {GRID_SIZE_CAP}")
    logger.info(f"Boolean tolerance: {BOOL_TOL:g}")
    logger.info(f"Degree-1 tolerance: {DEGREE_TOL:g}")
    logger.info(f"Enumeration cap: {ENUM_CAP}")
    logger.info(f"Verify workers: {VERIFY_WORKERS}")
    logger.info(f"Available memory: {available_mb:.0f} MB")
    logger.info("=" * 50)
