"""
The weak product K_r^n.

Two vertices are adjacent iff they differ in every coordinate, so a vertex
set is independent iff every pair agrees somewhere. Vertices are stored as
point indices of the underlying GridShape.
"""
from __future__ import annotations

import itertools
import logging
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from app import config as _cfg
from core.errors import NotIndependentError, ValidationError
from core.zrn import GridFunction, GridShape, coordinate_table, index_of, point_of, require_same_shape, validate_point

logger = logging.getLogger(__name__)

_PAIR_BLOCK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class VertexSet:
    shape: GridShape
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(int(k) for k in self.members)
        for k in members:
            if not 0 <= k < self.shape.size:
                raise ValidationError(f"vertex index {k} is outside [0, {self.shape.size})")
        if len(set(members)) != len(members):
            raise ValidationError("vertex set contains duplicate vertices")
        object.__setattr__(self, "members", tuple(sorted(members)))

    @classmethod
    def from_points(cls, shape: GridShape, points: Iterable[Sequence[int]]):
        return cls(shape, tuple(index_of(p, shape) for p in points))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, index: object) -> bool:
        if isinstance(index, bool) or not isinstance(index, (int, np.integer)):
            return False
        pos = bisect_left(self.members, index)
        return pos < len(self.members) and self.members[pos] == index

    def points(self) -> list[tuple[int, ...]]:
        return [point_of(k, self.shape) for k in self.members]

    def indicator(self) -> GridFunction:
        return GridFunction.indicator(self.shape, self.members)

    def measure(self) -> Fraction:
        return Fraction(len(self.members), self.shape.size)


@dataclass(frozen=True)
class IndependentSet(VertexSet):
    def __post_init__(self) -> None:
        VertexSet.__post_init__(self)
        self._check_independent()

    def _check_independent(self) -> None:
        pair = find_adjacent_pair(self)
        if pair is not None:
            u, v = pair
            raise NotIndependentError(point_of(u, self.shape), point_of(v, self.shape))


@dataclass(frozen=True)
class DictatorSet(IndependentSet):
    coord: int = 1
    value: int = 0

    def _check_independent(self) -> None:
        expected = _dictator_members(self.shape, self.coord, self.value)
        if self.members != expected:
            raise ValidationError(f"members do not form the dictator x_{self.coord} = {self.value}")

    @property
    def key(self) -> tuple[int, int]:
        return self.coord, self.value


@dataclass(frozen=True)
class EnumerationResult:
    sets: list[IndependentSet]
    truncated: bool
    method: str


def adjacent(u: Sequence[int], v: Sequence[int], shape: GridShape) -> bool:
    pu = validate_point(u, shape)
    pv = validate_point(v, shape)
    return all(a != b for a, b in zip(pu, pv))


def find_adjacent_pair(A: VertexSet) -> tuple[int, int] | None:
    """First adjacent pair (u < v) in index order, or None."""
    members = np.asarray(A.members, dtype=np.int64)
    m = members.shape[0]
    if m < 2:
        return None
    pts = coordinate_table(A.shape)[members]
    block = max(1, _PAIR_BLOCK_ENTRIES // (m * A.shape.n))
    cols = np.arange(m)
    for start in range(0, m, block):
        stop = min(m, start + block)
        adj = np.all(pts[start:stop, None, :] != pts[None, :, :], axis=2)
        adj &= cols[None, :] > np.arange(start, stop)[:, None]
        hits = np.argwhere(adj)
        if hits.size:
            a, b = hits[0]
            return int(members[start + a]), int(members[b])
    return None


def is_independent(A: VertexSet) -> bool:
    return find_adjacent_pair(A) is None


def as_independent(A: VertexSet) -> IndependentSet:
    """Refine A, raising NotIndependentError when two members are adjacent."""
    if isinstance(A, IndependentSet):
        return A
    return IndependentSet(A.shape, A.members)


def _dictator_members(shape: GridShape, i: int, j: int) -> tuple[int, ...]:
    if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not 1 <= i <= shape.n:
        raise ValidationError(f"dictator coordinate {i!r} is outside [1, {shape.n}]")
    if isinstance(j, bool) or not isinstance(j, (int, np.integer)) or not 0 <= j < shape.r:
        raise ValidationError(f"dictator value {j!r} is outside [0, {shape.r})")
    column = coordinate_table(shape)[:, i - 1]
    return tuple(int(k) for k in np.flatnonzero(column == j))


def dictator_set(shape: GridShape, i: int, j: int) -> DictatorSet:
    return DictatorSet(shape, _dictator_members(shape, i, j), int(i), int(j))


def dictators(shape: GridShape) -> Iterator[DictatorSet]:
    """All r*n dictators, (i, j) ascending."""
    for i in range(1, shape.n + 1):
        for j in range(shape.r):
            yield dictator_set(shape, i, j)


def epsilon_of(J: VertexSet) -> Fraction:
    """eps with |J|/|G| = (1 - eps)/r, exact."""
    J = as_independent(J)
    return 1 - Fraction(J.shape.r * len(J), J.shape.size)


def sym_diff_measure(A: VertexSet, B: VertexSet) -> Fraction:
    require_same_shape(A.shape, B.shape)
    return Fraction(len(set(A.members) ^ set(B.members)), A.shape.size)


def _adjacency_masks(shape: GridShape) -> list[int]:
    pts = coordinate_table(shape)
    masks = []
    for k in range(shape.size):
        row = np.all(pts != pts[k], axis=1)
        mask = 0
        for other in np.flatnonzero(row):
            mask |= 1 << int(other)
        masks.append(mask)
    return masks


def _diagonal_coset_masks(shape: GridShape) -> list[int]:
    """Cosets of the all-ones diagonal; each one is a clique of K_r^n."""
    pts = coordinate_table(shape)
    offsets = (pts[:, 1:] - pts[:, :1]) % shape.r
    weights = shape.r ** np.arange(shape.n - 1, dtype=np.int64)
    ids = offsets @ weights if shape.n > 1 else np.zeros(shape.size, dtype=np.int64)
    masks = [0] * (shape.r ** (shape.n - 1))
    for k, coset in enumerate(ids):
        masks[int(coset)] |= 1 << k
    return masks


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _enumerate_subsets(shape: GridShape, target: int, limit: int) -> list[tuple[int, ...]]:
    adj = _adjacency_masks(shape)
    found: list[tuple[int, ...]] = []
    for combo in itertools.combinations(range(shape.size), target):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if all(adj[v] & mask == 0 for v in combo):
            found.append(combo)
            if len(found) >= limit:
                break
    return found


def _enumerate_branch(shape: GridShape, target: int, limit: int) -> list[tuple[int, ...]]:
    adj = _adjacency_masks(shape)
    cosets = _diagonal_coset_masks(shape)
    found: list[tuple[int, ...]] = []

    def upper_bound(cand: int) -> int:
        return sum(1 for coset in cosets if coset & cand)

    def extend(chosen: list[int], cand: int) -> bool:
        if len(chosen) == target:
            found.append(tuple(chosen))
            return len(found) >= limit
        need = target - len(chosen)
        if cand.bit_count() < need or upper_bound(cand) < need:
            return False
        rest = cand
        for v in _iter_bits(cand):
            rest &= ~(1 << v)
            if rest.bit_count() + 1 < need or upper_bound(rest | (1 << v)) < need:
                return False
            chosen.append(v)
            stop = extend(chosen, rest & ~adj[v])
            chosen.pop()
            if stop:
                return True
        return False

    if target == 0:
        return [()]
    extend([], (1 << shape.size) - 1)
    return found


def max_independent_sets(
    shape: GridShape,
    size_target: int | None = None,
    cap: int | None = None,
    method: str = "auto",
) -> EnumerationResult:
    """
    All independent sets of exactly `size_target` vertices (default r^{n-1}),
    lexicographic in their sorted index tuples. At most `cap` sets are
    returned; `truncated` says whether more exist.
    """
    target = shape.r ** (shape.n - 1) if size_target is None else int(size_target)
    cap = _cfg.ENUM_CAP if cap is None else int(cap)
    if target < 0 or cap < 1:
        raise ValidationError("size target must be >= 0 and cap >= 1")
    if method == "auto":
        small = shape.size <= 32 and math.comb(shape.size, min(target, shape.size)) <= _cfg.SUBSET_ENUM_LIMIT
        method = "subsets" if small else "branch"
    if method not in ("subsets", "branch"):
        raise ValidationError(f"unknown enumeration method {method!r}")
    if target > shape.size:
        return EnumerationResult([], False, method)

    logger.debug("enumerating size-%s independent sets of K_%s^%s via %s", target, shape.r, shape.n, method)
    if method == "subsets":
        raw = _enumerate_subsets(shape, target, cap + 1)
    else:
        raw = _enumerate_branch(shape, target, cap + 1)
    truncated = len(raw) > cap
    if truncated:
        logger.warning("enumeration of K_%s^%s stopped at cap %s", shape.r, shape.n, cap)
    sets = [IndependentSet(shape, members) for members in raw[:cap]]
    return EnumerationResult(sets, truncated, method)


def maximal_independent_sets(shape: GridShape, cap: int | None = None) -> EnumerationResult:
    """Inclusion-maximal independent sets: Bron-Kerbosch with pivoting on the agreement graph."""
    cap = _cfg.ENUM_CAP if cap is None else int(cap)
    adj = _adjacency_masks(shape)
    everything = (1 << shape.size) - 1
    agree = [everything & ~adj[v] & ~(1 << v) for v in range(shape.size)]
    found: list[tuple[int, ...]] = []

    def expand(R: list[int], P: int, X: int) -> bool:
        if not P and not X:
            found.append(tuple(sorted(R)))
            return len(found) > cap
        pivot = max(_iter_bits(P | X), key=lambda u: (P & agree[u]).bit_count())
        for v in _iter_bits(P & ~agree[pivot]):
            R.append(v)
            stop = expand(R, P & agree[v], X & agree[v])
            R.pop()
            if stop:
                return True
            P &= ~(1 << v)
            X |= 1 << v
        return False

    expand([], everything, 0)
    truncated = len(found) > cap
    ordered = sorted(found[:cap])
    return EnumerationResult([IndependentSet(shape, members) for members in ordered], truncated, "bron_kerbosch")


def perturb(d: DictatorSet, k: int, seed: int) -> IndependentSet:
    """Remove k members of d chosen uniformly without replacement."""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 0 <= k <= len(d):
        raise ValidationError(f"k must lie in [0, {len(d)}], got {k!r}")
    if seed < 0:
        raise ValidationError(f"seed must be non-negative, got {seed}")
    rng = np.random.default_rng(seed)
    removed = set(int(v) for v in rng.choice(np.asarray(d.members), size=int(k), replace=False))
    return IndependentSet(d.shape, tuple(v for v in d.members if v not in removed))


def sample_sub_dictator(shape: GridShape, seed: int) -> IndependentSet:
    """A random subset of a random dictator."""
    rng = np.random.default_rng(seed)
    i = int(rng.integers(1, shape.n + 1))
    j = int(rng.integers(0, shape.r))
    d = dictator_set(shape, i, j)
    k = int(rng.integers(0, len(d) + 1))
    return perturb(d, k, int(rng.integers(0, 2**62)))
