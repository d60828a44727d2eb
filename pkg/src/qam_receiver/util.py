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
from typing import Optional

import qam_receiver.logging.receiver_logger
from qam_receiver.receiver_exception import InvalidParameterException

receiver_logger = qam_receiver.logging.receiver_logger.getReceiverLogger()


def require_finite(value: float, name: str) -> float:
    if not math.isfinite(value):
        raise InvalidParameterException(message="{} must be finite, got {}".format(name, value))
    return float(value)


def require_photon_number(nbar: float, name: str = "nbar") -> float:
    """
    Validate a mean photon number: finite and non-negative.
    """
    value = require_finite(nbar, name)
    if value < 0:
        raise InvalidParameterException(message="{} must be non-negative, got {}".format(name, value))
    return value


def require_positive(value: float, name: str, allow_inf: Optional[bool] = False) -> float:
    if not (allow_inf and value == math.inf):
        require_finite(value, name)
    if not value > 0:
        raise InvalidParameterException(message="{} must be positive, got {}".format(name, value))
    return float(value)
