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

from enum import auto
from strenum import StrEnum


class ReceiverEvent(StrEnum):
    """
    Receiver Events.

    Events exist to provide structure to log messages, so that long sweeps
    and validation runs can be post-processed from their logs without
    reg-ex parsing.  Some events are error conditions and overlap with
    exceptions, but not all events indicate errors.
    """

    TRACE = auto()
    GRAM_EIGENVALUES_CLIPPED = auto()
    HELSTROM_SOLVE_CONVERGED = auto()
    HELSTROM_SOLVE_FAILED = auto()
    BETA_OPTIMIZED = auto()
    SIMULATION_COMPLETE = auto()
    SWEEP_POINT_COMPLETE = auto()
    SWEEP_WRITTEN = auto()
    VALIDATION_CHECK_PASSED = auto()
    VALIDATION_CHECK_FAILED = auto()
    INVARIANT_VIOLATION = auto()
