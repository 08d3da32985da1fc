"""Text, CSV and JSON rendering of results."""
from __future__ import annotations

