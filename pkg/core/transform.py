"""Fourier transform on Z_r^n, level decomposition and the degree-1 toolkit."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Collection, Mapping, Sequence

import numpy as np

from app import config as _cfg
from core.errors import DomainError, ValidationError
from core.zrn import (
    GridFunction,
    GridShape,
    Spectrum,
    coordinate_table,
    dist01_norm_sq,
    from_grid,
    roots_of_unity,
    support_sizes,
    to_grid,
)

logger = logging.getLogger(__name__)

# Rows of the naive character matrix built per block.
_NAIVE_BLOCK_ENTRIES = 1 << 22

LevelPredicate = Callable[[int], bool] | Collection[int]


@dataclass(frozen=True, eq=False)
class LevelWeights:
    """weights[k] = ||f^{=k}||_2^2 for k = 0..n."""

    shape: GridShape
    weights: np.ndarray

    @property
    def total(self) -> float:
        return float(np.sum(self.weights))

    def above(self, k: int) -> float:
        """||f^{>k}||_2^2."""
        return float(np.sum(self.weights[k + 1 :]))

    def as_list(self) -> list[float]:
        return [float(w) for w in self.weights]


@dataclass(frozen=True, eq=False)
class CoordinateComponent:
    """g_i as a function of x_i, and a_i^2 = ||g_i||_2^2."""

    i: int
    g_i: np.ndarray
    a_i_sq: float


def forward(f: GridFunction) -> Spectrum:
    """Naive transform straight from the definition, O(N^2)."""
    shape = f.shape
    size = shape.size
    coords = coordinate_table(shape)
    roots = roots_of_unity(shape.r)
    coeffs = np.empty(size, dtype=np.complex128)
    block = max(1, _NAIVE_BLOCK_ENTRIES // size)
    for start in range(0, size, block):
        stop = min(size, start + block)
        exponents = (-(coords[start:stop] @ coords.T)) % shape.r
        coeffs[start:stop] = roots[exponents] @ f.values
    return Spectrum(shape, coeffs / size)


def _axis_passes(values: np.ndarray, shape: GridShape, sign: int) -> np.ndarray:
    r = shape.r
    steps = np.arange(r)
    kernel = roots_of_unity(r)[(sign * np.outer(steps, steps)) % r]
    grid = values.reshape((r,) * shape.n, order="F")
    for axis in range(shape.n):
        grid = np.moveaxis(np.tensordot(kernel, grid, axes=([1], [axis])), 0, axis)
    return from_grid(shape, grid)


def fast_forward(f: GridFunction) -> Spectrum:
    """n passes of size-r DFTs, one per axis; O(N * n * r)."""
    coeffs = _axis_passes(f.values, f.shape, -1) / f.shape.size
    return Spectrum(f.shape, coeffs)


def fast_inverse(spec: Spectrum) -> GridFunction:
    return GridFunction(spec.shape, _axis_passes(spec.coeffs, spec.shape, 1))


def inverse(spec: Spectrum) -> GridFunction:
    """f(T) = sum_S f^(S) u_S(T)."""
    return fast_inverse(spec)


def level_weights(spec: Spectrum) -> LevelWeights:
    sizes = support_sizes(spec.shape)
    weights = np.bincount(sizes, weights=np.abs(spec.coeffs) ** 2, minlength=spec.shape.n + 1)
    return LevelWeights(spec.shape, weights.astype(np.float64))


def _level_mask(shape: GridShape, keep: LevelPredicate) -> np.ndarray:
    if callable(keep):
        per_level = np.array([bool(keep(k)) for k in range(shape.n + 1)])
    else:
        wanted = set(keep)
        per_level = np.array([k in wanted for k in range(shape.n + 1)])
    return per_level[support_sizes(shape)]


def project(spec: Spectrum, keep: LevelPredicate) -> GridFunction:
    """Sum of F_S over the multi-indices whose level passes `keep`."""
    mask = _level_mask(spec.shape, keep)
    return fast_inverse(Spectrum(spec.shape, np.where(mask, spec.coeffs, 0)))


def _require_coordinate(shape: GridShape, i: int) -> int:
    if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not 1 <= i <= shape.n:
        raise ValidationError(f"coordinate {i!r} is outside [1, {shape.n}]")
    return int(i)


def unit_multiples(shape: GridShape, i: int) -> np.ndarray:
    """Indices of j*e_i for j = 1..r-1."""
    i = _require_coordinate(shape, i)
    return np.arange(1, shape.r, dtype=np.int64) * shape.r ** (i - 1)


def coordinate_component(spec: Spectrum, i: int) -> CoordinateComponent:
    shape = spec.shape
    coeffs = spec.coeffs[unit_multiples(shape, i)]
    steps = np.arange(shape.r)
    kernel = roots_of_unity(shape.r)[np.outer(steps, np.arange(1, shape.r)) % shape.r]
    g_i = kernel @ coeffs
    g_i.flags.writeable = False
    return CoordinateComponent(int(i), g_i, float(np.sum(np.abs(coeffs) ** 2)))


def coordinate_weights(spec: Spectrum) -> np.ndarray:
    """a_i^2 for i = 1..n (entry i-1)."""
    return np.array([coordinate_component(spec, i).a_i_sq for i in range(1, spec.shape.n + 1)])


def _normalize_assignment(
    shape: GridShape, fixed_coords: Collection[int], y: Mapping[int, int] | Sequence[int]
) -> dict[int, int]:
    fixed = sorted({_require_coordinate(shape, i) for i in fixed_coords})
    if len(fixed) != len(list(fixed_coords)):
        raise ValidationError("fixed coordinates must be distinct")
    if isinstance(y, Mapping):
        if set(y) != set(fixed):
            raise ValidationError(f"assignment keys {sorted(y)} do not match fixed coordinates {fixed}")
        assignment = {i: y[i] for i in fixed}
    else:
        values = list(y)
        if len(values) != len(fixed):
            raise ValidationError(f"assignment has {len(values)} values for {len(fixed)} fixed coordinates")
        assignment = dict(zip(fixed, values))
    for i, value in assignment.items():
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or not 0 <= value < shape.r:
            raise ValidationError(f"value {value!r} for coordinate {i} is outside [0, {shape.r})")
    return {i: int(v) for i, v in assignment.items()}


def require_degree_at_most_one(f: GridFunction, tol: float | None = None) -> Spectrum:
    tol = _cfg.DEGREE_TOL if tol is None else tol
    spec = fast_forward(f)
    weights = level_weights(spec).weights
    residue = float(np.max(weights[2:])) if weights.shape[0] > 2 else 0.0
    if residue >= tol:
        raise DomainError(f"function is not of degree <= 1: level weight {residue:.3g} above level 1")
    return spec


def restrict(
    fle1: GridFunction,
    fixed_coords: Collection[int],
    y: Mapping[int, int] | Sequence[int],
) -> GridFunction:
    """
    Fix the coordinates in `fixed_coords` to `y` and return the function of the rest.

    The free coordinates keep their original order. When every coordinate is
    fixed the result is the constant f(y) on Z_r^1.
    """
    require_degree_at_most_one(fle1)
    return _slice(fle1, _normalize_assignment(fle1.shape, fixed_coords, y))


def _slice(fle1: GridFunction, assignment: Mapping[int, int]) -> GridFunction:
    shape = fle1.shape
    free = [i for i in range(1, shape.n + 1) if i not in assignment]
    index = tuple(assignment[i] if i in assignment else slice(None) for i in range(1, shape.n + 1))
    sliced = to_grid(fle1)[index]
    if not free:
        residual = GridShape(shape.r, 1)
        return GridFunction.constant(residual, complex(sliced))
    residual = GridShape(shape.r, len(free))
    return GridFunction(residual, from_grid(residual, sliced))


def restriction_offset(spec: Spectrum, assignment: Mapping[int, int]) -> complex:
    """b = f^(0) + sum over fixed i of g_i(y_i)."""
    b = complex(spec.coeffs[0])
    for i, value in assignment.items():
        b += complex(coordinate_component(spec, i).g_i[value])
    return b


def restriction_mean_dist01(fle1: GridFunction, fixed_coords: Collection[int]) -> float:
    """Mean over every assignment y of ||d(restriction, {0,1})||_2^2."""
    require_degree_at_most_one(fle1)
    fixed = sorted(_normalize_assignment(fle1.shape, fixed_coords, [0] * len(set(fixed_coords))))
    total = 0.0
    count = 0
    for y in itertools.product(range(fle1.shape.r), repeat=len(fixed)):
        total += dist01_norm_sq(_slice(fle1, dict(zip(fixed, y))))
        count += 1
    return total / count
