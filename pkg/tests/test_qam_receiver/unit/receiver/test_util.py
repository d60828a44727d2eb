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

from qam_receiver.receiver_exception import InvalidParameterException
from qam_receiver.util import require_finite, require_photon_number, require_positive


class TestRequireHelpers(unittest.TestCase):
    def test_require_finite(self):
        self.assertEqual(2.5, require_finite(2.5, "x"))
        for bad in (math.nan, math.inf, -math.inf):
            with self.assertRaises(InvalidParameterException):
                require_finite(bad, "x")

    def test_require_photon_number(self):
        self.assertEqual(0.0, require_photon_number(0))
        self.assertEqual(3.0, require_photon_number(3))
        with self.assertRaises(InvalidParameterException) as cm:
            require_photon_number(-0.1)
        self.assertIn("nbar", str(cm.exception))
        with self.assertRaises(InvalidParameterException):
            require_photon_number(math.nan)

    def test_require_positive(self):
        self.assertEqual(1e-9, require_positive(1e-9, "tol"))
        with self.assertRaises(InvalidParameterException):
            require_positive(0.0, "tol")
        with self.assertRaises(InvalidParameterException):
            require_positive(math.inf, "tol")
        self.assertEqual(math.inf, require_positive(math.inf, "tol", allow_inf=True))
