"""Shared helpers with no product-specific behavior."""
from __future__ import annotations

