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
# The hybrid 16-QAM receiver package : `qam_receiver`

This package models a two stage receiver for 16-QAM coherent states.  The
incoming symbol is split on a balanced beam splitter; a homodyne detector on
one arm selects one of the four constellation rows, and a sequential nulling
displacement receiver on the other arm picks the column by counting photons.

The primary interfaces are as follows:

- [qam_receiver.build_qam16][] & [qam_receiver.split][] - The alphabet at a
      given mean photon number, and its view behind the beam splitter.
- [qam_receiver.ReceiverConfig][] & [qam_receiver.total_error][] - The
      analytic symbol error of exact nulling (Type I) or offset nulling
      with a common real displacement beta (Type II).
- [qam_receiver.optimize_beta][] - The displacement minimizing the Type II
      error.
- [qam_receiver.bounds][] - The standard quantum limit and the Helstrom
      minimum-error bound used as benchmarks.
- [qam_receiver.estimate_error][] - An independent, reproducible Monte Carlo
      simulation of the whole protocol.

All values are immutable and every operation is a pure function of its
inputs.  Library errors derive from [qam_receiver.ReceiverException][].
"""

from .receiver_exception import (
    ReceiverException,
    InvalidParameterException,
    InvariantViolationException,
    GramFactorizationException,
    ConvergenceException,
)
from .logging.events import ReceiverEvent
from .logging.receiver_logger import (
    ReceiverLogger,
    setPyLoggerForReceiverLogger,
    setStructuredLogging,
    setStringLogging,
)
from .quantum_core import (
    ComplexAmplitude,
    RateSequence,
    ClickDistribution,
    VACUUM,
    coherent_overlap,
    gaussian_tail,
    homodyne_pdf,
    click_distribution,
)
from .constellation import (
    Constellation,
    ArmView,
    NullingOrder,
    build_qam16,
    split,
    row_candidates,
    nulling_sequence,
    symbol_index,
)
from .receiver import (
    ReceiverConfig,
    ReceiverMode,
    RowConfusion,
    row_confusion,
    stage2_rates,
    decide_column,
    column_success_given_correct_row,
    total_error,
    total_error_exhaustive,
    symbol_success_probabilities,
)
from .bounds import (
    GramMatrix,
    EmbeddedStates,
    PovmSolution,
    sql_error,
    gram_matrix,
    embed_states,
    helstrom_bound,
    solve_min_error_measurement,
    square_root_measurement_error,
    binary_helstrom_error,
)
from .optimizer import BetaResult, optimize_beta
from .montecarlo import (
    TrialOutcome,
    ErrorEstimate,
    simulate_trial,
    estimate_error,
    sample_click_counts,
    wilson_interval,
)

__all__ = [
    "ArmView",
    "BetaResult",
    "ClickDistribution",
    "ComplexAmplitude",
    "Constellation",
    "ConvergenceException",
    "EmbeddedStates",
    "ErrorEstimate",
    "GramFactorizationException",
    "GramMatrix",
    "InvalidParameterException",
    "InvariantViolationException",
    "NullingOrder",
    "PovmSolution",
    "RateSequence",
    "ReceiverConfig",
    "ReceiverEvent",
    "ReceiverException",
    "ReceiverLogger",
    "ReceiverMode",
    "RowConfusion",
    "TrialOutcome",
    "VACUUM",
    "binary_helstrom_error",
    "build_qam16",
    "click_distribution",
    "coherent_overlap",
    "column_success_given_correct_row",
    "decide_column",
    "embed_states",
    "estimate_error",
    "gaussian_tail",
    "gram_matrix",
    "helstrom_bound",
    "homodyne_pdf",
    "nulling_sequence",
    "optimize_beta",
    "row_candidates",
    "row_confusion",
    "sample_click_counts",
    "setPyLoggerForReceiverLogger",
    "setStringLogging",
    "setStructuredLogging",
    "simulate_trial",
    "solve_min_error_measurement",
    "split",
    "sql_error",
    "square_root_measurement_error",
    "stage2_rates",
    "symbol_index",
    "symbol_success_probabilities",
    "total_error",
    "total_error_exhaustive",
    "wilson_interval",
]
