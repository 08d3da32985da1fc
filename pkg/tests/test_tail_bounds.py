from __future__ import annotations

import math
import unittest

import numpy as np

from core.errors import DomainError
from core.tail_bounds import (
    C_CAP,
    TailParams,
    bennett_h,
    bennett_log_tail,
    bennett_tail,
    evaluate,
    h_lower_bound,
    lemma33_c,
    lemma33_c_within_cap,
    lemma33_in_regime,
    lemma33_integral_bound,
    lemma33_tail,
)


class BennettTest(unittest.TestCase):
    def test_h_values(self) -> None:
        self.assertEqual(bennett_h(0.0), 0.0)
        self.assertAlmostEqual(bennett_h(1.0), 2 * math.log(2) - 1, places=15)
        self.assertAlmostEqual(bennett_h(math.e - 1), 1.0, places=12)
        np.testing.assert_allclose(bennett_h(np.array([0.0, 1.0])), [0.0, 2 * math.log(2) - 1])
        with self.assertRaises(DomainError):
            bennett_h(-0.1)

    def test_h_small_u_is_quadratic(self) -> None:
        u = 1e-6
        self.assertAlmostEqual(bennett_h(u) / (u * u / 2), 1.0, places=5)

    def test_lower_bound_below_h(self) -> None:
        u = np.linspace(math.e, 200.0, 50)
        self.assertTrue(np.all(h_lower_bound(u) <= bennett_h(u)))
        self.assertAlmostEqual(h_lower_bound(math.e), 0.0, places=15)
        with self.assertRaises(DomainError):
            h_lower_bound(1.0)

    def test_bennett_tail(self) -> None:
        self.assertAlmostEqual(bennett_tail(TailParams(1.0, 1.0, 1.0)), math.e / 4, places=15)
        self.assertAlmostEqual(bennett_tail(TailParams(1.0, 1.0, 1.0)), math.exp(1 - 2 * math.log(2)), places=12)

    def test_underflowing_bound_stays_positive(self) -> None:
        params = TailParams(1e-6, 1e-3, 10.0)
        self.assertLess(bennett_log_tail(params), -1e4)
        self.assertGreater(bennett_tail(params), 0.0)
        report = evaluate(params)
        self.assertGreater(report.bennett, 0.0)
        self.assertTrue(report.bennett_underflows)
        self.assertEqual(report.bennett_log, bennett_log_tail(params))
        self.assertGreater(report.lemma33, 0.0)
        self.assertFalse(evaluate(TailParams(1.0, 1.0, 1.0)).bennett_underflows)

    def test_tail_is_monotone(self) -> None:
        ts = np.linspace(0.05, 5.0, 60)
        tails = [bennett_tail(TailParams(0.5, 0.3, float(t))) for t in ts]
        self.assertTrue(all(a >= b for a, b in zip(tails, tails[1:])))
        variances = np.linspace(0.05, 5.0, 60)
        tails = [bennett_tail(TailParams(float(v), 0.3, 1.0)) for v in variances]
        self.assertTrue(all(a <= b for a, b in zip(tails, tails[1:])))

    def test_params_must_be_positive(self) -> None:
        for bad in [(0.0, 1.0, 1.0), (1.0, -1.0, 1.0), (1.0, 1.0, math.inf)]:
            with self.assertRaises(DomainError):
                TailParams(*bad)


class ConcentrationStepTest(unittest.TestCase):
    EPS = 1e-8
    C = math.sqrt(2) * 1e-2

    def test_lemma_tail_at_the_regime_floor(self) -> None:
        value = lemma33_tail(self.EPS, self.C, 1 / 6)
        direct = math.exp(-(1 / 6) / self.C * math.log((1 / 6) * self.C / (1e4 * math.e * self.EPS)))
        self.assertAlmostEqual(value / direct, 1.0, places=12)
        self.assertGreater(value, 1e-12)
        self.assertLess(value, 1e-10)

    def test_out_of_regime(self) -> None:
        self.assertFalse(lemma33_in_regime(self.EPS, self.C, 0.1))
        with self.assertRaises(DomainError):
            lemma33_tail(self.EPS, self.C, 0.1)
        # the variance floor overtakes 1/6 once eps' is large enough
        self.assertFalse(lemma33_in_regime(1e-5, self.C, 1.0))

    def test_lemma_tail_dominates_bennett(self) -> None:
        rng = np.random.default_rng(33)
        for _ in range(1000):
            eps_prime = 10 ** rng.uniform(-10, -6)
            c = 10 ** rng.uniform(-3, -1)
            floor = max(1 / 6, 1e4 * math.e * eps_prime / c)
            t = floor * (1 + rng.uniform(0, 3))
            lemma_log = -(t / c) * math.log(t * c / (1e4 * math.e * eps_prime))
            bennett_log = bennett_log_tail(TailParams(1e4 * eps_prime, c, t))
            self.assertGreaterEqual(lemma_log, bennett_log - 1e-9 * abs(bennett_log))
            self.assertGreaterEqual(lemma33_tail(eps_prime, c, t), bennett_tail(TailParams(1e4 * eps_prime, c, t)))

    def test_integral_bound(self) -> None:
        bound = lemma33_integral_bound(self.EPS, self.C)
        self.assertAlmostEqual(bound / (2 * lemma33_tail(self.EPS, self.C, 1 / 6)), 1.0, places=12)
        self.assertLess(bound, self.EPS)

    def test_c_cap(self) -> None:
        self.assertAlmostEqual(C_CAP, 0.0141421356, places=9)
        self.assertAlmostEqual(lemma33_c(20, 1e-9), math.sqrt(2e-4), places=15)
        self.assertTrue(lemma33_c_within_cap(20, 0.5e-9))
        self.assertFalse(lemma33_c_within_cap(20, 1e-8))

    def test_evaluate(self) -> None:
        report = evaluate(TailParams(1e4 * self.EPS, self.C, 1 / 6))
        self.assertTrue(report.in_regime)
        self.assertAlmostEqual(report.lemma33 / lemma33_tail(self.EPS, self.C, 1 / 6), 1.0, places=12)
        self.assertTrue(report.integral_below_eps)
        outside = evaluate(TailParams(1.0, 1.0, 1.0))
        self.assertFalse(outside.in_regime)
        self.assertIsNone(outside.lemma33)
        self.assertAlmostEqual(outside.bennett, math.e / 4, places=15)

    def test_integral_bound_overflows_to_infinity(self) -> None:
        report = evaluate(TailParams(1.0, 1e-3, 3000.0))
        self.assertTrue(report.in_regime)
        self.assertEqual(report.integral_bound, math.inf)
        self.assertFalse(report.integral_below_eps)


if __name__ == "__main__":
    unittest.main()
