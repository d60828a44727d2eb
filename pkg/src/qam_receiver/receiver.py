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
Analytic error model of the hybrid receiver.

The incoming symbol is split on a balanced beam splitter.  One arm is
measured by a P-quadrature homodyne detector which selects a row; the row's
four candidates are fed forward to a displacement receiver on the other arm
that nulls them one after the other, advancing on every click.  The final
click count N selects the candidate at position min(N + 1, 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import auto
from typing import Sequence, Tuple

import numpy as np
import scipy.special
from strenum import StrEnum

from qam_receiver.constellation import (
    QAM16_ROWS,
    QAM16_SYMBOLS,
    NullingOrder,
    build_qam16,
    nulling_sequence,
    row_candidates,
    split,
)
from qam_receiver.quantum_core import (
    HOMODYNE_VARIANCE,
    ComplexAmplitude,
    RateSequence,
    click_distribution,
)
from qam_receiver.receiver_exception import InvalidParameterException, InvariantViolationException
from qam_receiver.util import require_finite, require_photon_number

_ROW_SUM_TOLERANCE = 1e-12


class ReceiverMode(StrEnum):
    """
    TYPE_I nulls each candidate exactly (beta = 0).  TYPE_II adds a common
    real displacement beta to every nulling stage.
    """

    TYPE_I = auto()
    TYPE_II = auto()


@dataclass(frozen=True)
class ReceiverConfig:
    nbar: float
    beta: float = 0.0
    mode: ReceiverMode = ReceiverMode.TYPE_II
    order: NullingOrder = NullingOrder.ASCENDING

    def __post_init__(self):
        require_photon_number(self.nbar)
        require_finite(self.beta, "beta")
        if self.mode == ReceiverMode.TYPE_I and self.beta != 0.0:
            raise InvalidParameterException(
                message="Type I (exact nulling) requires beta = 0, got {}".format(self.beta)
            )

    @staticmethod
    def type_i(nbar: float, order: NullingOrder = NullingOrder.ASCENDING) -> ReceiverConfig:
        return ReceiverConfig(nbar=nbar, beta=0.0, mode=ReceiverMode.TYPE_I, order=order)

    @staticmethod
    def type_ii(nbar: float, beta: float, order: NullingOrder = NullingOrder.ASCENDING) -> ReceiverConfig:
        return ReceiverConfig(nbar=nbar, beta=beta, mode=ReceiverMode.TYPE_II, order=order)


@dataclass(frozen=True)
class RowConfusion:
    """
    matrix[r - 1, r' - 1] = P(decide row r' | true row r).
    """

    matrix: np.ndarray

    def __post_init__(self):
        if self.matrix.shape != (QAM16_ROWS, QAM16_ROWS):
            raise InvariantViolationException(message="Row confusion must be 4x4, got {}".format(self.matrix.shape))
        if np.any(self.matrix < 0.0) or np.any(self.matrix > 1.0):
            raise InvariantViolationException(message="Row confusion entries must lie in [0, 1]")
        row_sums = self.matrix.sum(axis=1)
        if np.max(np.abs(row_sums - 1.0)) > _ROW_SUM_TOLERANCE:
            raise InvariantViolationException(message="Row confusion rows must sum to 1, got {}".format(row_sums))

    def entry(self, true_row: int, decided_row: int) -> float:
        return float(self.matrix[true_row - 1, decided_row - 1])

    def mean_correct(self) -> float:
        return float(np.trace(self.matrix)) / QAM16_ROWS


def homodyne_thresholds(arm_scale: float) -> np.ndarray:
    """
    Maximum likelihood decision thresholds between adjacent row means, i.e.
    the midpoints s' * {-2, 0, 2} for arm scale s'.
    """
    return np.array([-2.0 * arm_scale, 0.0, 2.0 * arm_scale])


def row_confusion(nbar: float) -> RowConfusion:
    """
    Confusion matrix of the nearest-mean homodyne row decision.  Row means are
    Im = s * b / sqrt(2), b in {-3, -1, 1, 3}, with Gaussian noise sigma = 1/2.

    At zero signal every outcome is equidistant from all row means, and the
    tie goes to row 1 as in the simulated receiver.
    """
    if require_photon_number(nbar) == 0.0:
        matrix = np.zeros((QAM16_ROWS, QAM16_ROWS))
        matrix[:, 0] = 1.0
        return RowConfusion(matrix=matrix)

    _, nulling_arm = split(build_qam16(nbar))
    sigma = math.sqrt(HOMODYNE_VARIANCE)
    means = nulling_arm.row_means()
    edges = np.concatenate(([-np.inf], homodyne_thresholds(nulling_arm.scale), [np.inf]))

    cdf = scipy.special.ndtr((edges[np.newaxis, :] - means[:, np.newaxis]) / sigma)
    matrix = np.clip(np.diff(cdf, axis=1), 0.0, 1.0)
    return RowConfusion(matrix=matrix)


def stage2_rates(
    true_arm_amp: ComplexAmplitude, candidates: Sequence[ComplexAmplitude], beta: float
) -> RateSequence:
    """
    Click rates while nulling each candidate: |alpha - candidate_m + beta|^2,
    with beta applied along the real axis.
    """
    rates = []
    for candidate in candidates:
        residue_re = true_arm_amp.re - candidate.re + beta
        residue_im = true_arm_amp.im - candidate.im
        rates.append(residue_re * residue_re + residue_im * residue_im)
    return RateSequence.of(rates)


def decide_column(clicks: int) -> int:
    """
    Nulling position selected by a click count: H_{N+1} for N <= 3, else H_4.
    """
    if clicks < 0:
        raise InvalidParameterException(message="Click count must be non-negative, got {}".format(clicks))
    return min(clicks + 1, 4)


def column_success_given_correct_row(
    nbar: float, beta: float, order: NullingOrder = NullingOrder.ASCENDING
) -> Tuple[float, float, float, float]:
    """
    P(correct column | correct row) for each nulling position j = 1..4:
    P(N = j - 1) for j < 4 and P(N >= 3) for j = 4.  With ascending order
    the position equals the column.

    Within the correct row every residue is real, so the result does not
    depend on which row is used.
    """
    require_finite(beta, "beta")
    _, nulling_arm = split(build_qam16(nbar))
    candidates = row_candidates(nulling_arm, 1, order)
    success = []
    for position, true_amp in enumerate(candidates, start=1):
        distribution = click_distribution(stage2_rates(true_amp, candidates, beta))
        success.append(distribution[position - 1])
    return success[0], success[1], success[2], success[3]


def total_error(config: ReceiverConfig) -> float:
    """
    Symbol error probability of the hybrid receiver.  A wrong row decision is
    always a symbol error, so the success probability factorizes into the
    mean row success times the mean column success.
    """
    row_success = row_confusion(config.nbar).mean_correct()
    column_success = math.fsum(column_success_given_correct_row(config.nbar, config.beta, config.order)) / 4.0
    return 1.0 - row_success * column_success


def symbol_success_probabilities(config: ReceiverConfig) -> np.ndarray:
    """
    P(correct decision | symbol m) for all 16 symbols.
    """
    confusion = row_confusion(config.nbar)
    column_success = column_success_given_correct_row(config.nbar, config.beta, config.order)
    success = np.zeros(QAM16_SYMBOLS)
    for row in range(1, QAM16_ROWS + 1):
        for position, index in enumerate(nulling_sequence(row, config.order)):
            success[index] = confusion.entry(row, row) * column_success[position]
    return success


def total_error_exhaustive(config: ReceiverConfig) -> float:
    """
    Brute force total error: every true symbol, every row decision, every
    click outcome.  Wrong-row clicks are computed from the full complex
    residues.  Agrees with `total_error` to round-off.
    """
    constellation = build_qam16(config.nbar)
    _, nulling_arm = split(constellation)
    confusion = row_confusion(config.nbar)

    correct = []
    for true_index, true_amp in enumerate(nulling_arm.amplitudes):
        true_row = constellation.row_of(true_index)
        for decided_row in range(1, QAM16_ROWS + 1):
            p_row = confusion.entry(true_row, decided_row)
            sequence = nulling_sequence(decided_row, config.order)
            candidates = row_candidates(nulling_arm, decided_row, config.order)
            distribution = click_distribution(stage2_rates(true_amp, candidates, config.beta))
            for clicks in range(4):
                decided_index = sequence[decide_column(clicks) - 1]
                if decided_index == true_index:
                    correct.append(p_row * distribution[clicks])
    return 1.0 - math.fsum(correct) / QAM16_SYMBOLS
