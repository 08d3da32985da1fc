from __future__ import annotations

import unittest

import numpy as np

from core.errors import DomainError, ValidationError
from core.product_graph import dictator_set
from core.transform import (
    coordinate_component,
    coordinate_weights,
    fast_forward,
    fast_inverse,
    forward,
    inverse,
    level_weights,
    project,
    require_degree_at_most_one,
    restrict,
    restriction_mean_dist01,
    restriction_offset,
)
from core.zrn import (
    BooleanFunction,
    GridFunction,
    GridShape,
    character_function,
    coordinate_table,
    dist01_norm_sq,
    index_of,
    p_norm,
    roots_of_unity,
)

SHAPES = [(3, 2), (4, 2), (5, 2), (3, 3), (2, 4)]


def _random_function(shape: GridShape, seed: int) -> GridFunction:
    rng = np.random.default_rng(seed)
    return GridFunction(shape, rng.normal(size=shape.size) + 1j * rng.normal(size=shape.size))


def _worked_example() -> BooleanFunction:
    shape = GridShape(3, 2)
    return BooleanFunction.from_ones(shape, [index_of((0, 0), shape), index_of((0, 1), shape)])


class TransformTest(unittest.TestCase):
    def test_fast_transform_matches_definition(self) -> None:
        for seed, (r, n) in enumerate(SHAPES):
            f = _random_function(GridShape(r, n), seed)
            np.testing.assert_allclose(fast_forward(f).coeffs, forward(f).coeffs, atol=1e-12)

    def test_inverse_recovers_values(self) -> None:
        f = _random_function(GridShape(4, 3), 7)
        np.testing.assert_allclose(inverse(fast_forward(f)).values, f.values, atol=1e-12)
        np.testing.assert_allclose(fast_inverse(forward(f)).values, f.values, atol=1e-12)

    def test_parseval(self) -> None:
        for seed, (r, n) in enumerate(SHAPES):
            f = _random_function(GridShape(r, n), 100 + seed)
            total = level_weights(fast_forward(f)).total
            self.assertAlmostEqual(total, float(np.mean(np.abs(f.values) ** 2)), places=10)

    def test_character_has_single_coefficient(self) -> None:
        shape = GridShape(5, 2)
        spec = fast_forward(character_function((2, 3), shape))
        expected = np.zeros(shape.size)
        expected[index_of((2, 3), shape)] = 1.0
        np.testing.assert_allclose(spec.coeffs, expected, atol=1e-12)
        np.testing.assert_allclose(level_weights(spec).as_list(), [0.0, 0.0, 1.0], atol=1e-12)

    def test_worked_example_spectrum(self) -> None:
        f = _worked_example()
        spec = fast_forward(f)
        omega = np.exp(2j * np.pi / 3)
        for s2 in range(3):
            for s1 in range(3):
                expected = (1 + omega ** (-s2)) / 9
                self.assertAlmostEqual(spec.coefficient((s1, s2)), expected, places=12)
        np.testing.assert_allclose(level_weights(spec).weights, [4 / 81, 10 / 81, 4 / 81], atol=1e-15)
        np.testing.assert_allclose(coordinate_weights(spec), [8 / 81, 2 / 81], atol=1e-15)

    def test_projections_sum_to_function(self) -> None:
        f = _random_function(GridShape(3, 3), 11)
        spec = fast_forward(f)
        parts = [project(spec, {k}) for k in range(4)]
        np.testing.assert_allclose(sum(p.values for p in parts), f.values, atol=1e-12)
        np.testing.assert_allclose(project(spec, lambda k: k <= 1).values, (parts[0].values + parts[1].values), atol=1e-12)

    def test_projection_level_weights(self) -> None:
        spec = fast_forward(_random_function(GridShape(4, 2), 3))
        low = level_weights(fast_forward(project(spec, {0, 1}))).weights
        self.assertAlmostEqual(low[2], 0.0, places=14)
        self.assertAlmostEqual(low[1], level_weights(spec).weights[1], places=12)

    def test_coordinate_component_of_worked_example(self) -> None:
        spec = fast_forward(_worked_example())
        g1 = coordinate_component(spec, 1)
        np.testing.assert_allclose(g1.g_i, [4 / 9, -2 / 9, -2 / 9], atol=1e-15)
        self.assertAlmostEqual(g1.a_i_sq, 8 / 81, places=15)
        g2 = coordinate_component(spec, 2)
        np.testing.assert_allclose(g2.g_i, [1 / 9, 1 / 9, -2 / 9], atol=1e-15)
        with self.assertRaises(ValidationError):
            coordinate_component(spec, 3)

    def test_coordinate_weights_sum_to_level_one(self) -> None:
        spec = fast_forward(_random_function(GridShape(5, 3), 5))
        self.assertAlmostEqual(float(np.sum(coordinate_weights(spec))), level_weights(spec).weights[1], places=12)


class SpectralIdentityTest(unittest.TestCase):
    def test_random_functions_on_every_small_shape(self) -> None:
        rng = np.random.default_rng(1)
        for r in range(3, 8):
            for n in range(1, 5):
                shape = GridShape(r, n)
                for _ in range(100):
                    f = GridFunction(shape, rng.normal(size=shape.size) + 1j * rng.normal(size=shape.size))
                    scale = max(1.0, f.max_abs())
                    fast = fast_forward(f)
                    naive = forward(f)
                    self.assertLess(float(np.max(np.abs(inverse(fast).values - f.values))), 1e-10 * scale)
                    energy = p_norm(f, 2) ** 2
                    self.assertLess(abs(float(np.sum(np.abs(fast.coeffs) ** 2)) - energy), 1e-9 * energy)
                    reference = max(1.0, float(np.max(np.abs(naive.coeffs))))
                    self.assertLess(float(np.max(np.abs(fast.coeffs - naive.coeffs))), 1e-9 * reference)

    def test_dictator_spectrum_closed_form(self) -> None:
        for r in (3, 5):
            roots = roots_of_unity(r)
            for n in (2, 3):
                shape = GridShape(r, n)
                for i in range(1, n + 1):
                    for j in range(r):
                        expected = np.zeros(shape.size, dtype=np.complex128)
                        for k in range(r):
                            S = [0] * n
                            S[i - 1] = k
                            expected[index_of(S, shape)] = roots[(-k * j) % r] / r
                        spec = fast_forward(dictator_set(shape, i, j).indicator())
                        np.testing.assert_allclose(spec.coeffs, expected, rtol=0, atol=1e-12)
                        np.testing.assert_allclose(np.abs(spec.coeffs[expected != 0]), 1 / r, rtol=0, atol=1e-12)

    def test_real_functions_have_conjugate_symmetric_spectra(self) -> None:
        rng = np.random.default_rng(8)
        for r, n in [(3, 2), (4, 3), (5, 2), (7, 2)]:
            shape = GridShape(r, n)
            coeffs = fast_forward(GridFunction(shape, rng.normal(size=shape.size))).coeffs
            negated = ((-coordinate_table(shape)) % r) @ (r ** np.arange(n))
            np.testing.assert_allclose(coeffs[negated], np.conj(coeffs), rtol=0, atol=1e-12)

    def test_projection_is_idempotent(self) -> None:
        spec = fast_forward(_random_function(GridShape(4, 3), 21))
        for keep in ({0, 1}, {2}, lambda k: k >= 1):
            once = project(spec, keep)
            twice = project(fast_forward(once), keep)
            np.testing.assert_allclose(twice.values, once.values, rtol=0, atol=1e-12)


class RestrictionTest(unittest.TestCase):
    def setUp(self) -> None:
        self.spec = fast_forward(_worked_example())
        self.fle1 = project(self.spec, {0, 1})

    def test_rejects_higher_degree(self) -> None:
        with self.assertRaises(DomainError):
            require_degree_at_most_one(_worked_example())
        with self.assertRaises(DomainError):
            restrict(_worked_example(), [2], [0])
        with self.assertRaises(DomainError):
            restriction_mean_dist01(_worked_example(), [2])

    def test_restriction_of_worked_example(self) -> None:
        restricted = restrict(self.fle1, [2], {2: 0})
        self.assertEqual(restricted.shape, GridShape(3, 1))
        np.testing.assert_allclose(restricted.values, [1 / 9 + 2 / 3, 1 / 9, 1 / 9], atol=1e-14)
        self.assertAlmostEqual(restriction_offset(self.spec, {2: 0}), 1 / 3, places=14)

    def test_fixing_every_coordinate_gives_a_constant(self) -> None:
        restricted = restrict(self.fle1, [1, 2], [0, 2])
        self.assertEqual(restricted.shape, GridShape(3, 1))
        np.testing.assert_allclose(restricted.values, [4 / 9] * 3, atol=1e-14)

    def test_bad_assignment(self) -> None:
        with self.assertRaises(ValidationError):
            restrict(self.fle1, [2], [3])
        with self.assertRaises(ValidationError):
            restrict(self.fle1, [2], {1: 0})
        with self.assertRaises(ValidationError):
            restrict(self.fle1, [2, 2], [0, 0])

    def test_mean_over_assignments_matches_full_norm(self) -> None:
        full = dist01_norm_sq(self.fle1)
        self.assertAlmostEqual(full, 4 / 81, places=14)
        self.assertAlmostEqual(restriction_mean_dist01(self.fle1, [2]), full, places=14)
        self.assertAlmostEqual(restriction_mean_dist01(self.fle1, [1]), full, places=14)
        self.assertAlmostEqual(restriction_mean_dist01(self.fle1, [1, 2]), full, places=14)
        with self.assertRaises(ValidationError):
            restriction_mean_dist01(self.fle1, [3])


if __name__ == "__main__":
    unittest.main()
