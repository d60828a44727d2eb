# Copyright 2025 The qam-receiver Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import unittest

import numpy as np

from qam_receiver.optimizer import (
    BetaResult,
    beta_grid,
    default_bracket,
    golden_section_search,
    optimize_beta,
)
from qam_receiver.receiver import ReceiverConfig, total_error
from qam_receiver.receiver_exception import InvalidParameterException


class TestGoldenSectionSearch(unittest.TestCase):
    def test_quadratic(self):
        lo, hi, x, fx = golden_section_search(lambda v: (v - 1.0) ** 2, -3.0, 4.0, 1e-8)
        self.assertLessEqual(hi - lo, 1e-8)
        self.assertAlmostEqual(1.0, x, delta=1e-8)
        self.assertAlmostEqual(0.0, fx, delta=1e-15)

    def test_reversed_bounds(self):
        _, _, x, _ = golden_section_search(lambda v: abs(v + 0.5), 2.0, -2.0, 1e-9)
        self.assertAlmostEqual(-0.5, x, delta=1e-9)

    def test_interval_already_small(self):
        lo, hi, x, _ = golden_section_search(lambda v: v, 0.0, 1e-10, 1e-6)
        self.assertEqual((0.0, 1e-10), (lo, hi))
        self.assertEqual(0.5e-10, x)


class TestBetaGrid(unittest.TestCase):
    def test_default_bracket(self):
        lo, hi = default_bracket(10.0)
        expected = 3.0 / math.sqrt(2.0) + 2.0
        self.assertAlmostEqual(-expected, lo, delta=1e-12)
        self.assertAlmostEqual(expected, hi, delta=1e-12)
        self.assertEqual((-2.0, 2.0), default_bracket(0.0))

    def test_grid_contains_zero(self):
        grid = beta_grid((-1.3, 2.1), 41)
        self.assertIn(0.0, grid)
        self.assertGreaterEqual(len(grid), 41)
        self.assertTrue(np.all(np.diff(grid) > 0.0))


class TestOptimizeBeta(unittest.TestCase):
    def test_never_worse_than_exact_nulling(self):
        for nbar in (0.5, 2.0, 8.0):
            result = optimize_beta(nbar)
            self.assertLessEqual(result.error_at_beta, result.error_at_zero)
            self.assertEqual(total_error(ReceiverConfig.type_i(nbar)), result.error_at_zero)
            self.assertEqual(result.beta_star * result.beta_star, result.beta_star_sq)

    def test_reported_error_is_error_at_beta_star(self):
        result = optimize_beta(3.0)
        self.assertEqual(total_error(ReceiverConfig.type_ii(3.0, result.beta_star)), result.error_at_beta)

    def test_vacuum_ties_resolve_to_zero(self):
        result = optimize_beta(0.0)
        self.assertEqual(0.0, result.beta_star)
        self.assertAlmostEqual(15.0 / 16.0, result.error_at_zero, delta=1e-12)
        self.assertEqual(result.error_at_zero, result.error_at_beta)

    def test_deterministic(self):
        self.assertEqual(optimize_beta(4.0), optimize_beta(4.0))
        self.assertIsInstance(optimize_beta(4.0), BetaResult)

    def test_refinement_stays_in_grid_cell(self):
        bracket = default_bracket(5.0)
        cell = (bracket[1] - bracket[0]) / 40
        grid_only = optimize_beta(5.0, refine=False)
        refined = optimize_beta(5.0)
        self.assertLessEqual(refined.error_at_beta, grid_only.error_at_beta)
        self.assertLessEqual(abs(refined.beta_star - grid_only.beta_star), cell + 1e-12)

    def test_custom_bracket(self):
        result = optimize_beta(2.0, bracket=(-0.5, 0.5), grid_points=81)
        self.assertLessEqual(abs(result.beta_star), 0.5)

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidParameterException):
            optimize_beta(2.0, bracket=(0.5, 2.0))
        with self.assertRaises(InvalidParameterException):
            optimize_beta(2.0, bracket=(1.0, 1.0))
        with self.assertRaises(InvalidParameterException):
            optimize_beta(2.0, bracket=(-math.inf, 1.0))
        with self.assertRaises(InvalidParameterException):
            optimize_beta(2.0, tol=0.0)
        with self.assertRaises(InvalidParameterException):
            optimize_beta(2.0, grid_points=10)
        with self.assertRaises(InvalidParameterException):
            optimize_beta(-2.0)
