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

import unittest

import click

from qam_receiver import ConvergenceException, InvalidParameterException, InvariantViolationException
from qam_receiver_utils.commands.cli.util import (
    ReceiverRuntimeException,
    ReceiverUsageException,
    ValidationFailedException,
    recast_exceptions_to_click,
)
from qam_receiver_utils.constants import ExitCode
from qam_receiver_utils.sweep_config import SweepConfigException


def raiser(exception):
    @recast_exceptions_to_click()
    def raise_it():
        raise exception

    return raise_it


class TestRecastExceptionsToClick(unittest.TestCase):
    def test_usage_errors(self):
        for exception in (InvalidParameterException(message="bad nbar"), SweepConfigException(message="bad key")):
            with self.assertRaises(ReceiverUsageException) as cm:
                raiser(exception)()
            self.assertEqual(ExitCode.USAGE, cm.exception.exit_code)

    def test_invariant_violation_is_validation_failure(self):
        with self.assertRaises(ValidationFailedException) as cm:
            raiser(InvariantViolationException(message="helstrom above sql"))()
        self.assertEqual(ExitCode.VALIDATION, cm.exception.exit_code)

    def test_everything_else_is_runtime_failure(self):
        for exception in (ConvergenceException(message="stalled"), OSError("disk full")):
            with self.assertRaises(ReceiverRuntimeException) as cm:
                raiser(exception)()
            self.assertEqual(ExitCode.RUNTIME, cm.exception.exit_code)
            self.assertIs(exception, cm.exception.__cause__)

    def test_click_exceptions_pass_through(self):
        original = click.BadParameter("nope")
        with self.assertRaises(click.BadParameter) as cm:
            raiser(original)()
        self.assertIs(original, cm.exception)

    def test_unlisted_exceptions_pass_through(self):
        @recast_exceptions_to_click(InvalidParameterException)
        def raise_key_error():
            raise KeyError("x")

        with self.assertRaises(KeyError):
            raise_key_error()

    def test_return_value(self):
        @recast_exceptions_to_click()
        def ok():
            return 42

        self.assertEqual(42, ok())
