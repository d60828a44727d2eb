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

"""
Benchmark curves for the hybrid receiver: the standard quantum limit of an
ideal heterodyne receiver and the Helstrom minimum-error bound.
"""

from .sql import sql_error, sql_quadrature_error
from .gram import GramMatrix, EmbeddedStates, gram_matrix, gram_matrix_of, embed_states
from .helstrom import (
    PovmSolution,
    binary_helstrom_error,
    helstrom_bound,
    optimality_residual,
    solve_min_error_measurement,
    square_root_measurement_error,
)

__all__ = [
    "EmbeddedStates",
    "GramMatrix",
    "PovmSolution",
    "binary_helstrom_error",
    "embed_states",
    "gram_matrix",
    "gram_matrix_of",
    "helstrom_bound",
    "optimality_residual",
    "solve_min_error_measurement",
    "sql_error",
    "sql_quadrature_error",
    "square_root_measurement_error",
]
