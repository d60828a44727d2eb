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

import logging
import unittest
from unittest import mock

import numpy as np
import pytest

from qam_receiver.bounds import helstrom
from qam_receiver.bounds import (
    PovmSolution,
    binary_helstrom_error,
    helstrom_bound,
    solve_min_error_measurement,
    sql_error,
    square_root_measurement_error,
)
from qam_receiver.bounds.helstrom import DEFAULT_HELSTROM_TOL
from qam_receiver.constellation import build_qam16
from qam_receiver.logging.events import ReceiverEvent
from qam_receiver.quantum_core import ComplexAmplitude
from qam_receiver.receiver import ReceiverConfig, total_error
from qam_receiver.receiver_exception import (
    ConvergenceException,
    InvalidParameterException,
    InvariantViolationException,
)


class TestBinaryDiscrimination(unittest.TestCase):
    def test_random_pairs_match_closed_form(self):
        rng = np.random.default_rng(2024)
        for _ in range(20):
            re_a, im_a, re_b, im_b = rng.uniform(-1.5, 1.5, size=4)
            a = ComplexAmplitude(re_a, im_a)
            b = ComplexAmplitude(re_b, im_b)
            solution = solve_min_error_measurement([a, b])
            self.assertAlmostEqual(binary_helstrom_error(a, b), solution.error_probability, delta=1e-9)

    def test_identical_states(self):
        a = ComplexAmplitude(0.4, 0.1)
        self.assertEqual(0.5, binary_helstrom_error(a, a))
        self.assertAlmostEqual(0.5, solve_min_error_measurement([a, a]).error_probability, delta=1e-12)

    def test_single_state_is_certain(self):
        solution = solve_min_error_measurement([ComplexAmplitude(1.0, 1.0)])
        self.assertAlmostEqual(0.0, solution.error_probability, delta=1e-12)

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidParameterException):
            solve_min_error_measurement([])
        with self.assertRaises(InvalidParameterException):
            solve_min_error_measurement([ComplexAmplitude(0.0, 0.0)], tol=0.0)
        with self.assertRaises(InvalidParameterException):
            solve_min_error_measurement([ComplexAmplitude(0.0, 0.0)], max_iterations=0)


class TestQam16Helstrom(unittest.TestCase):
    def test_vacuum_is_guessing(self):
        error, _ = helstrom_bound(build_qam16(0.0))
        self.assertAlmostEqual(15.0 / 16.0, error, delta=1e-12)
        self.assertAlmostEqual(15.0 / 16.0, square_root_measurement_error(build_qam16(0.0)), delta=1e-12)

    def test_optimality_certificate(self):
        error, solution = helstrom_bound(build_qam16(2.0))
        self.assertLessEqual(solution.residual, 1e-8)
        self.assertLessEqual(solution.completeness_error(), 1e-8)
        self.assertGreaterEqual(solution.min_operator_eigenvalue(), -1e-10)
        self.assertEqual((16, 16, 16), solution.operators.shape)
        self.assertAlmostEqual(1.0 - solution.success_probability, error, delta=1e-15)

    def test_below_every_physical_receiver(self):
        for nbar in (0.5, 2.0, 5.0):
            constellation = build_qam16(nbar)
            error, _ = helstrom_bound(constellation)
            self.assertLessEqual(error, square_root_measurement_error(constellation) + 1e-12)
            self.assertLessEqual(error, sql_error(nbar) + 1e-6)
            self.assertLessEqual(error, total_error(ReceiverConfig.type_i(nbar)) + 1e-6)

    def test_decreasing_in_nbar(self):
        errors = [helstrom_bound(build_qam16(nbar))[0] for nbar in (0.5, 2.0, 5.0)]
        self.assertGreater(errors[0], errors[1])
        self.assertGreater(errors[1], errors[2])

    def test_iteration_cap(self):
        with self.assertRaises(ConvergenceException) as cm:
            helstrom_bound(build_qam16(2.0), tol=1e-300, max_iterations=1)
        self.assertEqual(1, cm.exception.iterations())
        self.assertIsNotNone(cm.exception.last_residual())

    def test_halving_tolerance_is_stable(self):
        for nbar in (0.3, 1.0, 4.0):
            constellation = build_qam16(nbar)
            for tol in (1e-6, 1e-8):
                error, _ = helstrom_bound(constellation, tol=tol)
                refined_error, refined = helstrom_bound(constellation, tol=tol / 2.0)
                self.assertLessEqual(refined.residual, tol / 2.0)
                self.assertLessEqual(refined_error, error + tol)

    def test_iteration_cap_is_logged(self):
        with mock.patch.object(helstrom.receiver_logger, "log") as mock_log:
            with self.assertRaises(ConvergenceException):
                helstrom_bound(build_qam16(2.0), tol=1e-300, max_iterations=1)
        logged = mock_log.call_args.kwargs
        self.assertEqual(logging.ERROR, logged["level"])
        self.assertIsInstance(logged["exception"], ConvergenceException)
        self.assertEqual(ReceiverEvent.HELSTROM_SOLVE_FAILED, logged["exception"].event())


class TestPovmSolution(unittest.TestCase):
    def test_incomplete_measurement_rejected(self):
        operators = np.array([np.diag([1.0, 0.0]), np.diag([0.0, 0.5])])
        with self.assertRaises(InvariantViolationException):
            PovmSolution(operators=operators, success_probability=0.75, residual=0.0, iterations=1)

    def test_negative_element_rejected(self):
        operators = np.array([np.diag([1.5, 0.0]), np.diag([-0.5, 1.0])])
        with self.assertRaises(InvariantViolationException):
            PovmSolution(operators=operators, success_probability=0.75, residual=0.0, iterations=1)

    def test_success_below_guessing_rejected(self):
        operators = np.array([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])])
        with self.assertRaises(InvariantViolationException):
            PovmSolution(operators=operators, success_probability=0.25, residual=0.0, iterations=1)


@pytest.mark.parametrize("nbar", [0.1, 1.0, 3.0])
def test_helstrom_is_finite_and_in_range(nbar):
    error, solution = helstrom_bound(build_qam16(nbar))
    assert 0.0 <= error <= 15.0 / 16.0 + 1e-12
    assert solution.iterations >= 1


@pytest.mark.parametrize("nbar", np.geomspace(0.1, 30.0, 40).tolist())
def test_converges_on_log_sweep_grid(nbar):
    error, solution = helstrom_bound(build_qam16(nbar))
    assert solution.residual <= DEFAULT_HELSTROM_TOL
    assert solution.completeness_error() <= 1e-8
    assert solution.min_operator_eigenvalue() >= -1e-10
    assert error <= sql_error(nbar) + 1e-6
    assert error <= square_root_measurement_error(build_qam16(nbar)) + 1e-12
