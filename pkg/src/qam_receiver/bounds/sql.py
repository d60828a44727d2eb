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

from qam_receiver.constellation import QAM16_MEAN_LEVEL_ENERGY
from qam_receiver.quantum_core import HOMODYNE_VARIANCE, gaussian_tail
from qam_receiver.util import require_photon_number

HETERODYNE_VARIANCE = 2.0 * HOMODYNE_VARIANCE
"""Per-quadrature noise of an ideal heterodyne measurement: one extra vacuum unit."""


def sql_quadrature_error(nbar: float) -> float:
    """
    Error of one 4-level quadrature decision of the heterodyne receiver:
    levels s * {-3, -1, 1, 3}, noise variance 1/2, so (3/2) Q(s sqrt(2)).
    """
    scale = math.sqrt(require_photon_number(nbar) / QAM16_MEAN_LEVEL_ENERGY)
    return 1.5 * gaussian_tail(scale / math.sqrt(HETERODYNE_VARIANCE))


def sql_error(nbar: float) -> float:
    """
    Standard quantum limit for 16-QAM: symbol error of an ideal heterodyne
    receiver on the undivided input.  The two quadrature decisions are
    independent, so the symbol is correct only when both are.

    A dual-homodyne benchmark can be swapped in here; every caller goes
    through this function.
    """
    p_q = sql_quadrature_error(nbar)
    return 1.0 - (1.0 - p_q) ** 2
