"""Application bootstrap and settings layer."""
from __future__ import annotations

