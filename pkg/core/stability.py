"""
Recovery of a dictator from a near-maximum independent set, and the
numeric checks that go with it.

The pipeline is: spectrum of the indicator -> dominant coordinate i0 ->
degree-1 approximant g = f^(0) + g_{i0} -> rounding g to {0,1} -> the
dictator on coordinate i0 with the largest overlap.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from core.product_graph import (
    DictatorSet,
    VertexSet,
    as_independent,
    dictator_set,
    dictators,
    epsilon_of,
    sym_diff_measure,
)
from core.transform import coordinate_component, coordinate_weights, fast_forward, level_weights, project
from core.zrn import BooleanFunction, GridFunction, Spectrum, coordinate_table, dist01_norm_sq, round01

logger = logging.getLogger(__name__)

THEOREM_FACTOR = 40
TAIL_FACTOR = 2
ROUNDING_FACTOR = 4
REMARK_TRIVIAL_FACTOR = 2 * 10**9
LEMMA_TRIVIAL_FACTOR = 10**8 + 1
CLAIM1_FACTOR = 2000
CLAIM2_FACTOR = 4
LAMBDA = (1 - math.sqrt(0.5) - 0.25) / (math.sqrt(0.5) + 0.25)
G2_SUP_CAP = math.sqrt(0.5)

# Level-1 weight below this means the spectrum carries no coordinate signal.
_DEGENERATE_TOL = 1e-14

# Relative slack under which two coordinate weights count as tied.
_TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class RecoveryResult:
    i0: int
    g: np.ndarray
    g1: np.ndarray
    dictator: tuple[int, int]
    residual_g: float
    residual_g1: float
    degenerate: bool

    @property
    def rounding_bound_holds(self) -> bool:
        return self.residual_g1 <= ROUNDING_FACTOR * self.residual_g + 1e-9


@dataclass(frozen=True, eq=False)
class Hypotheses:
    r_at_least_20: bool
    epsilon_below_1e9: bool
    level1_at_most_inv_r: bool
    lemma_epsilon_small: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "r_at_least_20": self.r_at_least_20,
            "epsilon_below_1e9": self.epsilon_below_1e9,
            "level1_at_most_inv_r": self.level1_at_most_inv_r,
            "lemma_epsilon_small": self.lemma_epsilon_small,
        }


@dataclass(frozen=True, eq=False)
class StabilityReport:
    r: int
    n: int
    size: int
    epsilon: Fraction
    tail_weight: float
    tail_bound: Fraction
    lemma_epsilon: float
    level0_weight: float
    level1_weight: float
    a_sq_sorted: list[float]
    recovery: RecoveryResult
    symdiff: Fraction
    theorem_bound: Fraction
    remark_trivial_bound: Fraction
    lemma_trivial_bound: float
    hypotheses: Hypotheses
    oracle_dictator: tuple[int, int]
    oracle_symdiff: Fraction
    oracle_agrees: bool

    @property
    def tail_bound_holds(self) -> bool:
        return self.tail_weight <= float(self.tail_bound) + 1e-12

    @property
    def theorem_holds(self) -> bool:
        if self.epsilon == 0:
            return self.symdiff == 0
        return self.symdiff < self.theorem_bound

    @property
    def parseval_defect(self) -> float:
        return abs(self.tail_weight + self.level1_weight + self.level0_weight - self.size / (self.r**self.n))


@dataclass(frozen=True, eq=False)
class CorollaryResult:
    contained: bool
    witness: tuple[int, int] | None
    epsilon: Fraction
    threshold: float
    hypothesis_holds: bool
    gap_bound: Fraction
    gap_holds: bool


@dataclass(frozen=True, eq=False)
class ClaimDiagnostics:
    r: int
    epsilon: float
    level1_weight: float
    a2_sq: float
    claim1_threshold: float
    tail_sum_from_2: float
    claim2_threshold: float
    lambda_: float
    lambda_sq: float
    a2_sq_cap: float
    g2_sup: float
    fle1_dist01: float
    fle1_dist01_bound: float

    @property
    def claim1_holds(self) -> bool:
        return self.a2_sq < self.claim1_threshold or self.a2_sq == 0

    @property
    def claim2_holds(self) -> bool:
        return self.tail_sum_from_2 <= self.claim2_threshold + 1e-15

    @property
    def lemma_hypothesis(self) -> bool:
        return self.level1_weight <= 1.0 / self.r + 1e-15

    @property
    def a2_cap_holds(self) -> bool:
        return self.a2_sq <= self.a2_sq_cap + 1e-15

    @property
    def g2_sup_holds(self) -> bool:
        return self.g2_sup <= G2_SUP_CAP + 1e-12

    @property
    def fle1_dist01_holds(self) -> bool:
        return self.fle1_dist01 <= self.fle1_dist01_bound + 1e-12


def _first_maximum(a_sq: np.ndarray) -> int:
    """1-based index of the first weight within _TIE_TOL of the maximum."""
    top = float(np.max(a_sq))
    floor = top - _TIE_TOL * max(1.0, top)
    return int(np.flatnonzero(a_sq >= floor)[0]) + 1


def dominant_coordinate(spec: Spectrum) -> int:
    """argmax_i a_i^2, smallest index on ties."""
    return _first_maximum(coordinate_weights(spec))


def _dominant_value(f: BooleanFunction, i0: int) -> int:
    ones = np.flatnonzero(round01(f.values))
    column = coordinate_table(f.shape)[ones, i0 - 1]
    counts = np.bincount(column, minlength=f.shape.r)
    return int(np.argmax(counts))


def approximate_by_dictator(f: GridFunction) -> RecoveryResult:
    """Closest function of one coordinate (by the spectrum), then its rounding."""
    f = BooleanFunction.from_function(f)
    return _approximate(f, fast_forward(f))


def _approximate(f: BooleanFunction, spec: Spectrum) -> RecoveryResult:
    shape = f.shape
    weights = level_weights(spec)
    a_sq = coordinate_weights(spec)
    i0 = _first_maximum(a_sq)
    degenerate = float(np.sum(a_sq)) < _DEGENERATE_TOL
    if degenerate:
        logger.debug("level-1 weight vanishes; falling back to coordinate 1")

    g = complex(spec.coeffs[0]) + coordinate_component(spec, i0).g_i
    g1 = round01(g)
    residual_g = float(np.sum(a_sq) - a_sq[i0 - 1]) + weights.above(1)

    lifted = g1[coordinate_table(shape)[:, i0 - 1]]
    residual_g1 = float(np.mean(np.abs(f.values - lifted) ** 2))

    g.flags.writeable = False
    g1.flags.writeable = False
    return RecoveryResult(
        i0=i0,
        g=g,
        g1=g1,
        dictator=(i0, _dominant_value(f, i0)),
        residual_g=residual_g,
        residual_g1=residual_g1,
        degenerate=degenerate,
    )


def nearest_dictator_oracle(J: VertexSet) -> tuple[DictatorSet, Fraction]:
    """Exhaustive scan of all r*n dictators; ties go to the smallest (i, j)."""
    best: DictatorSet | None = None
    best_measure: Fraction | None = None
    for d in dictators(J.shape):
        measure = sym_diff_measure(J, d)
        if best_measure is None or measure < best_measure:
            best, best_measure = d, measure
    assert best is not None and best_measure is not None
    return best, best_measure


def recover_independent_set(J: VertexSet) -> tuple[DictatorSet, StabilityReport]:
    J = as_independent(J)
    shape = J.shape
    shape.require_stability_radix()
    f = BooleanFunction.from_ones(shape, J.members)
    spec = fast_forward(f)
    weights = level_weights(spec)
    a_sq = coordinate_weights(spec)
    recovery = _approximate(f, spec)
    dictator = dictator_set(shape, *recovery.dictator)
    oracle, oracle_measure = nearest_dictator_oracle(J)

    eps = epsilon_of(J)
    tail = weights.above(1)
    level1 = float(weights.weights[1])
    hypotheses = Hypotheses(
        r_at_least_20=shape.r >= 20,
        epsilon_below_1e9=eps < Fraction(1, 10**9),
        level1_at_most_inv_r=level1 <= 1.0 / shape.r,
        lemma_epsilon_small=tail < 1.0 / (1e8 * shape.r),
    )
    report = StabilityReport(
        r=shape.r,
        n=shape.n,
        size=len(J),
        epsilon=eps,
        tail_weight=tail,
        tail_bound=TAIL_FACTOR * eps / shape.r,
        lemma_epsilon=tail,
        level0_weight=float(weights.weights[0]),
        level1_weight=level1,
        a_sq_sorted=sorted((float(a) for a in a_sq), reverse=True),
        recovery=recovery,
        symdiff=sym_diff_measure(J, dictator),
        theorem_bound=THEOREM_FACTOR * eps / shape.r,
        remark_trivial_bound=REMARK_TRIVIAL_FACTOR * eps / shape.r,
        lemma_trivial_bound=LEMMA_TRIVIAL_FACTOR * tail,
        hypotheses=hypotheses,
        oracle_dictator=oracle.key,
        oracle_symdiff=oracle_measure,
        oracle_agrees=oracle.key == dictator.key,
    )
    if not report.tail_bound_holds:
        logger.warning(
            "tail weight %.6g exceeds 2*eps/r = %.6g for a size-%s set in K_%s^%s",
            tail, float(report.tail_bound), len(J), shape.r, shape.n,
        )
    return dictator, report


def corollary_threshold(r: int, n: int) -> float:
    return min(1e-9, (1 - 1 / r) ** (n - 1)) / THEOREM_FACTOR


def corollary_check(J: VertexSet) -> CorollaryResult:
    """Is J inside some dictator? Also checks the non-containment gap for every other dictator."""
    J = as_independent(J)
    shape = J.shape
    members = set(J.members)
    gap = Fraction((shape.r - 1) ** (shape.n - 1), shape.size)
    witness: tuple[int, int] | None = None
    gap_holds = True
    for d in dictators(shape):
        outside = set(d.members) - members
        if members <= set(d.members):
            if witness is None:
                witness = d.key
        elif Fraction(len(outside), shape.size) < gap:
            gap_holds = False
    eps = epsilon_of(J)
    threshold = corollary_threshold(shape.r, shape.n)
    return CorollaryResult(
        contained=witness is not None,
        witness=witness,
        epsilon=eps,
        threshold=threshold,
        hypothesis_holds=shape.r >= 20 and float(eps) < threshold,
        gap_bound=gap,
        gap_holds=gap_holds,
    )


def claim_diagnostics(f: GridFunction) -> ClaimDiagnostics:
    f = BooleanFunction.from_function(f)
    shape = f.shape
    spec = fast_forward(f)
    weights = level_weights(spec)
    a_sq = np.sort(coordinate_weights(spec))[::-1]
    eps = weights.above(1)
    a2_sq = float(a_sq[1]) if shape.n >= 2 else 0.0

    g2_sup = 0.0
    if shape.n >= 2:
        rest = coordinate_weights(spec)
        rest[_first_maximum(rest) - 1] = -np.inf
        second = _first_maximum(rest)
        g2_sup = float(np.max(np.abs(coordinate_component(spec, second).g_i)))

    fle1 = project(spec, {0, 1})
    return ClaimDiagnostics(
        r=shape.r,
        epsilon=eps,
        level1_weight=float(weights.weights[1]),
        a2_sq=a2_sq,
        claim1_threshold=CLAIM1_FACTOR * eps,
        tail_sum_from_2=float(np.sum(a_sq[1:])),
        claim2_threshold=CLAIM2_FACTOR * eps,
        lambda_=LAMBDA,
        lambda_sq=LAMBDA**2,
        a2_sq_cap=1.0 / (2.0 * shape.r),
        g2_sup=g2_sup,
        fle1_dist01=dist01_norm_sq(fle1),
        fle1_dist01_bound=2.0 * (dist01_norm_sq(f) + eps),
    )


def rounding_defect(f: GridFunction, g: GridFunction) -> tuple[float, float]:
    """(||f - round01(g)||^2, ||f - g||^2) for a Boolean f and any g."""
    f = BooleanFunction.from_function(f)
    rounded = round01(g.values)
    return (
        float(np.mean(np.abs(f.values - rounded) ** 2)),
        float(np.mean(np.abs(f.values - g.values) ** 2)),
    )
