"""Business service layer."""
from __future__ import annotations

