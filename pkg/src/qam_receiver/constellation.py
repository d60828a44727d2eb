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

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import auto
from typing import Tuple

import numpy as np
from strenum import StrEnum

from qam_receiver.quantum_core import ComplexAmplitude
from qam_receiver.receiver_exception import InvalidParameterException
from qam_receiver.util import require_photon_number

QAM16_LEVELS = (-3, -1, 1, 3)
"""Grid levels of either quadrature, before scaling."""

QAM16_ROWS = 4
QAM16_COLUMNS = 4
QAM16_SYMBOLS = QAM16_ROWS * QAM16_COLUMNS

QAM16_MEAN_LEVEL_ENERGY = 10.0
"""Mean of a^2 + b^2 over the unscaled grid."""


class NullingOrder(StrEnum):
    """
    Order in which the displacement receiver sweeps the four candidates of a row.
    """

    ASCENDING = auto()
    DESCENDING = auto()


def symbol_index(row: int, column: int) -> int:
    """
    Symbol index (0..15) of the grid cell at 1-based (row, column).
    Rows ascend with the imaginary part, columns with the real part.
    """
    _check_cell_index(row, "row")
    _check_cell_index(column, "column")
    return (row - 1) * QAM16_COLUMNS + (column - 1)


def _check_cell_index(index: int, name: str):
    if not 1 <= index <= QAM16_ROWS:
        raise InvalidParameterException(message="{} index must be in 1..4, got {}".format(name, index))


@dataclass(frozen=True)
class Constellation:
    """
    The 16-QAM coherent state alphabet with uniform priors.
    """

    nbar: float
    scale: float
    amplitudes: Tuple[ComplexAmplitude, ...]

    @property
    def size(self) -> int:
        return len(self.amplitudes)

    @property
    def prior(self) -> float:
        return 1.0 / self.size

    @staticmethod
    def row_of(index: int) -> int:
        return index // QAM16_COLUMNS + 1

    @staticmethod
    def col_of(index: int) -> int:
        return index % QAM16_COLUMNS + 1

    def mean_energy(self) -> float:
        return math.fsum(a.energy() for a in self.amplitudes) / self.size

    def as_array(self) -> np.ndarray:
        return np.array([a.as_complex() for a in self.amplitudes])

    def row_means(self) -> np.ndarray:
        """
        Imaginary parts of the four rows, ascending.
        """
        return np.array([self.scale * b for b in QAM16_LEVELS])


@dataclass(frozen=True)
class ArmView:
    """
    The constellation as seen in one output port of the balanced beam splitter.
    """

    scale: float
    amplitudes: Tuple[ComplexAmplitude, ...]

    def mean_energy(self) -> float:
        return math.fsum(a.energy() for a in self.amplitudes) / len(self.amplitudes)

    def row_means(self) -> np.ndarray:
        return np.array([self.scale * b for b in QAM16_LEVELS])


def build_qam16(nbar: float) -> Constellation:
    """
    Build the 16-QAM alphabet {s (a + i b) : a, b in {-3, -1, 1, 3}} with
    mean photon number `nbar`, i.e. s = sqrt(nbar / 10).
    """
    nbar = require_photon_number(nbar)
    scale = math.sqrt(nbar / QAM16_MEAN_LEVEL_ENERGY)
    amplitudes = tuple(ComplexAmplitude(re=scale * a, im=scale * b) for b in QAM16_LEVELS for a in QAM16_LEVELS)
    return Constellation(nbar=nbar, scale=scale, amplitudes=amplitudes)


def split(constellation: Constellation) -> Tuple[ArmView, ArmView]:
    """
    Model the 50:50 beam splitter.  Returns the (homodyne arm, nulling arm)
    views; each carries alpha / sqrt(2).  The reflected port phase is absorbed
    into the amplitude definition.
    """
    factor = 1.0 / math.sqrt(2.0)
    arm_amplitudes = tuple(a.scaled(factor) for a in constellation.amplitudes)
    arm_scale = constellation.scale * factor
    return ArmView(scale=arm_scale, amplitudes=arm_amplitudes), ArmView(scale=arm_scale, amplitudes=arm_amplitudes)


def nulling_sequence(row: int, order: NullingOrder = NullingOrder.ASCENDING) -> Tuple[int, int, int, int]:
    """
    Symbol indices of `row` in the order the displacement receiver nulls them.
    Columns ascend with the real part, so ascending order is column order.
    """
    _check_cell_index(row, "row")
    columns = range(1, QAM16_COLUMNS + 1)
    if order == NullingOrder.DESCENDING:
        columns = reversed(columns)
    indices = [symbol_index(row, column) for column in columns]
    return indices[0], indices[1], indices[2], indices[3]


def row_candidates(
    arm: ArmView, row: int, order: NullingOrder = NullingOrder.ASCENDING
) -> Tuple[ComplexAmplitude, ComplexAmplitude, ComplexAmplitude, ComplexAmplitude]:
    """
    The four arm amplitudes of `row`, in nulling order.  Ascending real part
    (the default) defines the sequence 1 -> 2 -> 3 -> 4.
    """
    a, b, c, d = (arm.amplitudes[index] for index in nulling_sequence(row, order))
    return a, b, c, d
