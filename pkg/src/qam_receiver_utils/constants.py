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

from strenum import StrEnum


class Spacing(StrEnum):
    """
    How sweep grid points are distributed between the photon number bounds.
    """

    LINEAR = "linear"
    LOG = "log"


class ExitCode:
    """
    Process exit codes of the `qamrx` utility.
    """

    OK = 0
    USAGE = 1
    RUNTIME = 2
    VALIDATION = 3


# Built-in defaults.  Command line flags win over configuration file
# values, which win over these.
DEFAULT_NBAR_MIN = 0.1
DEFAULT_NBAR_MAX = 30.0
DEFAULT_POINTS = 40
DEFAULT_SPACING = Spacing.LOG
DEFAULT_TRIALS = 0
DEFAULT_SIMULATE_TRIALS = 100_000
DEFAULT_SEED = 0
DEFAULT_BETA_TOL = 1e-6
DEFAULT_HELSTROM_TOL = 1e-8
DEFAULT_WORKERS = 1

# Sweep record invariant slack.
HELSTROM_ORDERING_SLACK = 1e-6
TYPE_ORDERING_SLACK = 1e-12

CSV_FLOAT_FORMAT = ".17g"
CSV_LINE_TERMINATOR = "\n"
