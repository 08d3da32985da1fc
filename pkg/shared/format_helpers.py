"""Formatting helpers shared by renderers, services and the session logger."""
from __future__ import annotations

from fractions import Fraction


def format_float(value: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(float(value), ".17g")


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fraction_payload(value: Fraction) -> dict:
    """Exact and floating views of a rational quantity, for JSON reports."""
    return {"fraction": format_fraction(value), "value": float(value)}


def format_dictator(key: tuple[int, int]) -> str:
    coord, value = key
    return f"x_{coord}={value}"


def create_progress_bar(percent, length=10):
    if percent < 0:
        percent = 0
    elif percent > 100:
        percent = 100
    filled_length = int(length * percent / 100)
    if percent > 0 and filled_length == 0:
        filled_length = 1
    bar = "■" * filled_length + "□" * (length - filled_length)
    return f"[{bar}]"
