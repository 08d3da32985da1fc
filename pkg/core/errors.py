"""Exception hierarchy shared by the numerical core, services and CLI."""
from __future__ import annotations


class DictatorLabError(Exception):
    """Root of every error raised on purpose by this project."""


class ValidationError(DictatorLabError, ValueError):
    """Malformed input: bad radix, out-of-range coordinate, shape mismatch, schema violation."""


class ShapeCapError(ValidationError):
    def __init__(self, r: int, n: int, cap: int):
        super().__init__(f"grid Z_{r}^{n} has {r ** n} points, above the size cap {cap}")
        self.r = r
        self.n = n
        self.cap = cap


class DomainError(DictatorLabError, ValueError):
    """Mathematical precondition violated (p < 1, non-Boolean input, out-of-regime tail bound...)."""


class NotIndependentError(DomainError):
    def __init__(self, u: tuple[int, ...], v: tuple[int, ...]):
        super().__init__(f"vertex set is not independent: {list(u)} and {list(v)} are adjacent")
        self.u = u
        self.v = v
