"""
Domain model for the group Z_r^n.

Points and multi-indices are plain tuples of residues. They map to a flat
index in little-endian mixed radix: coordinate 1 varies fastest, so
index = sum_i p_i * r**(i-1). Dense functions store their values in that
index order, which is also numpy's Fortran order for an array of shape
(r,) * n whose axis i-1 is coordinate i.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from app import config as _cfg
from core.errors import DomainError, ShapeCapError, ValidationError

logger = logging.getLogger(__name__)

Point = tuple[int, ...]
MultiIndex = Point


@dataclass(frozen=True, slots=True)
class GridShape:
    """The pair (r, n): vertex set of K_r^n and domain of every grid function."""

    r: int
    n: int

    def __post_init__(self) -> None:
        if isinstance(self.r, bool) or not isinstance(self.r, (int, np.integer)) or self.r < 2:
            raise ValidationError(f"radix r must be an integer >= 2, got {self.r!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValidationError(f"dimension n must be an integer >= 1, got {self.n!r}")
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "n", int(self.n))
        cap = _cfg.GRID_SIZE_CAP
        if self.r**self.n > cap:
            raise ShapeCapError(self.r, self.n, cap)

    @property
    def size(self) -> int:
        return self.r**self.n

    @property
    def binary_radix(self) -> bool:
        """Warning flag: r = 2 is a valid grid but outside the stability regime."""
        return self.r == 2

    def require_stability_radix(self) -> None:
        if self.r < 3:
            raise DomainError(f"stability analysis needs r >= 3, got r={self.r}")

    def points(self) -> np.ndarray:
        return coordinate_table(self)


@lru_cache(maxsize=64)
def coordinate_table(shape: GridShape) -> np.ndarray:
    """(r^n, n) read-only table; row k holds the coordinates of point index k."""
    idx = np.arange(shape.size, dtype=np.int64)
    table = np.empty((shape.size, shape.n), dtype=np.int64)
    for axis in range(shape.n):
        table[:, axis] = (idx // shape.r**axis) % shape.r
    table.flags.writeable = False
    return table


@lru_cache(maxsize=64)
def support_sizes(shape: GridShape) -> np.ndarray:
    """|S| for every multi-index, in index order."""
    sizes = np.count_nonzero(coordinate_table(shape), axis=1).astype(np.int64)
    sizes.flags.writeable = False
    return sizes


@lru_cache(maxsize=64)
def roots_of_unity(r: int) -> np.ndarray:
    """exp(2*pi*i*k/r) for k in [0, r), exact at quarter turns."""
    k = np.arange(r)
    roots = np.exp(2j * np.pi * k / r)
    exact = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}
    for step in range(r):
        if (4 * step) % r == 0:
            roots[step] = exact[(4 * step) // r]
    roots.flags.writeable = False
    return roots


def validate_point(p: Sequence[int], shape: GridShape) -> Point:
    if len(p) != shape.n:
        raise ValidationError(f"point {list(p)} has {len(p)} coordinates, expected {shape.n}")
    out = []
    for value in p:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or not 0 <= value < shape.r:
            raise ValidationError(f"coordinate {value!r} of {list(p)} is outside [0, {shape.r})")
        out.append(int(value))
    return tuple(out)


def index_of(p: Sequence[int], shape: GridShape) -> int:
    point = validate_point(p, shape)
    return sum(value * shape.r**axis for axis, value in enumerate(point))


def point_of(index: int, shape: GridShape) -> Point:
    if isinstance(index, bool) or not isinstance(index, (int, np.integer)) or not 0 <= index < shape.size:
        raise ValidationError(f"index {index!r} is outside [0, {shape.size})")
    index = int(index)
    return tuple((index // shape.r**axis) % shape.r for axis in range(shape.n))


def support_size(S: Sequence[int]) -> int:
    return sum(1 for value in S if value != 0)


def character(S: Sequence[int], T: Sequence[int], shape: GridShape) -> complex:
    """u_S(T) = exp(2*pi*i * sum S_i T_i / r)."""
    s = validate_point(S, shape)
    t = validate_point(T, shape)
    exponent = sum(a * b for a, b in zip(s, t)) % shape.r
    return complex(roots_of_unity(shape.r)[exponent])


def character_function(S: Sequence[int], shape: GridShape) -> "GridFunction":
    s = np.asarray(validate_point(S, shape), dtype=np.int64)
    exponents = (coordinate_table(shape) @ s) % shape.r
    return GridFunction(shape, roots_of_unity(shape.r)[exponents])


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Dense complex function on Z_r^n, values in point-index order."""

    shape: GridShape
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.complex128).reshape(-1)
        if values.shape[0] != self.shape.size:
            raise ValidationError(f"expected {self.shape.size} values for Z_{self.shape.r}^{self.shape.n}, got {values.shape[0]}")
        if not np.all(np.isfinite(values)):
            raise ValidationError("grid function values must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, shape: GridShape, value: complex) -> "GridFunction":
        return cls(shape, np.full(shape.size, value, dtype=np.complex128))

    @classmethod
    def indicator(cls, shape: GridShape, indices: Iterable[int]) -> "GridFunction":
        values = np.zeros(shape.size, dtype=np.complex128)
        values[list(indices)] = 1.0
        return cls(shape, values)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def is_real(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.values.imag) <= tol))


@dataclass(frozen=True, eq=False)
class BooleanFunction(GridFunction):
    """GridFunction whose values sit within `tol` of 0 or 1."""

    tol: float = field(default_factory=lambda: _cfg.BOOL_TOL)

    def __post_init__(self) -> None:
        GridFunction.__post_init__(self)
        worst = float(np.max(dist01(self.values))) if self.values.size else 0.0
        if worst > self.tol:
            raise DomainError(f"function is not Boolean: a value lies {worst:.3g} away from {{0,1}} (tol {self.tol:g})")

    @classmethod
    def from_function(cls, f: GridFunction, tol: float | None = None) -> "BooleanFunction":
        if isinstance(f, BooleanFunction) and tol is None:
            return f
        return cls(f.shape, f.values, _cfg.BOOL_TOL if tol is None else tol)

    @classmethod
    def from_ones(cls, shape: GridShape, ones: Iterable[int]) -> "BooleanFunction":
        base = GridFunction.indicator(shape, ones)
        return cls(shape, base.values)

    def ones(self) -> list[int]:
        """Point indices where the function rounds to 1."""
        return [int(k) for k in np.flatnonzero(round01(self.values))]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Fourier coefficients f^(S) in multi-index order."""

    shape: GridShape
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if coeffs.shape[0] != self.shape.size:
            raise ValidationError(f"expected {self.shape.size} coefficients, got {coeffs.shape[0]}")
        if not np.all(np.isfinite(coeffs)):
            raise ValidationError("spectrum coefficients must be finite")
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    def coefficient(self, S: Sequence[int]) -> complex:
        return complex(self.coeffs[index_of(S, self.shape)])


def require_same_shape(a: GridShape, b: GridShape) -> None:
    if a != b:
        raise ValidationError(f"shape mismatch: Z_{a.r}^{a.n} vs Z_{b.r}^{b.n}")


def to_grid(f: GridFunction) -> np.ndarray:
    """View the value vector as an array of shape (r,)*n, axis i-1 = coordinate i."""
    return f.values.reshape((f.shape.r,) * f.shape.n, order="F")


def from_grid(shape: GridShape, array: np.ndarray) -> np.ndarray:
    return np.asarray(array).reshape(-1, order="F")


def inner_product(f: GridFunction, g: GridFunction) -> complex:
    """<f, g> = E[f * conj(g)] under the uniform measure."""
    require_same_shape(f.shape, g.shape)
    return complex(np.vdot(g.values, f.values) / f.shape.size)


def p_norm(f: GridFunction, p: float) -> float:
    if not p >= 1:
        raise DomainError(f"p-norm needs p >= 1, got {p!r}")
    magnitudes = np.abs(f.values)
    if math.isinf(p):
        return float(np.max(magnitudes))
    return float(np.mean(magnitudes**p) ** (1.0 / p))


def dist01(z):
    """min(|z|, |z-1|); scalar in, float out; array in, array out."""
    values = np.asarray(z, dtype=np.complex128)
    out = np.minimum(np.abs(values), np.abs(values - 1.0))
    if out.ndim == 0:
        return float(out)
    return out


def round01(z):
    """Nearest element of {0, 1}; ties go to 0."""
    values = np.asarray(z, dtype=np.complex128)
    out = np.where(np.abs(values) <= np.abs(values - 1.0), 0, 1).astype(np.int64)
    if out.ndim == 0:
        return int(out)
    return out


def dist01_norm_sq(f: GridFunction) -> float:
    return float(np.mean(dist01(f.values) ** 2))
