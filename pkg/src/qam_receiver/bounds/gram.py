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
Gram matrix of a set of coherent states and its factorization G = B^H B.

The N pure states span at most N dimensions, so every minimum-error
computation happens on the columns of B rather than in a truncated Fock
space.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from qam_receiver.constellation import Constellation
from qam_receiver.logging.events import ReceiverEvent
from qam_receiver.quantum_core import ComplexAmplitude
from qam_receiver.receiver_exception import GramFactorizationException, InvariantViolationException
from qam_receiver.util import receiver_logger

GRAM_PSD_TOLERANCE = 1e-10
EMBEDDING_FAILURE_THRESHOLD = -1e-6
EMBEDDING_RELATIVE_CUTOFF = 1e-14


@dataclass(frozen=True)
class GramMatrix:
    """
    matrix[i, j] = <alpha_i|alpha_j>.  Hermitian, unit diagonal, PSD.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvariantViolationException(message="Gram matrix must be square, got {}".format(m.shape))
        if not np.allclose(m, m.conj().T, rtol=0.0, atol=1e-14):
            raise InvariantViolationException(message="Gram matrix must be Hermitian")
        if not np.allclose(np.diag(m), 1.0, rtol=0.0, atol=1e-14):
            raise InvariantViolationException(message="Gram matrix of normalized states must have a unit diagonal")
        min_eigenvalue = float(np.linalg.eigvalsh(m).min())
        if min_eigenvalue < -GRAM_PSD_TOLERANCE:
            raise InvariantViolationException(
                message="Gram matrix is not positive semidefinite (min eigenvalue {})".format(min_eigenvalue)
            )

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class EmbeddedStates:
    """
    Column i of `vectors` is the embedded state v_i, with <v_i, v_j> = G[i, j].
    """

    vectors: np.ndarray

    @property
    def dimension(self) -> int:
        return self.vectors.shape[0]

    @property
    def count(self) -> int:
        return self.vectors.shape[1]

    def vector(self, index: int) -> np.ndarray:
        return self.vectors[:, index]

    def reconstructed_gram(self) -> np.ndarray:
        return self.vectors.conj().T @ self.vectors


def gram_matrix_of(amplitudes: Sequence[ComplexAmplitude]) -> GramMatrix:
    alphas = np.array([a.as_complex() for a in amplitudes])
    energies = np.abs(alphas) ** 2
    exponent = -0.5 * (energies[:, np.newaxis] + energies[np.newaxis, :]) + np.outer(alphas.conj(), alphas)
    matrix = np.exp(exponent)
    matrix = 0.5 * (matrix + matrix.conj().T)
    np.fill_diagonal(matrix, 1.0)
    return GramMatrix(matrix=matrix)


def gram_matrix(constellation: Constellation) -> GramMatrix:
    return gram_matrix_of(constellation.amplitudes)


def embed_states(gram: Union[GramMatrix, np.ndarray]) -> EmbeddedStates:
    """
    Factor G = B^H B through the eigendecomposition G = V diag(w) V^H, taking
    B = diag(sqrt(w)) V^H.  Eigenvalues below `EMBEDDING_RELATIVE_CUTOFF`
    times the largest one are round-off and are set to zero, so that states
    which coincide numerically embed as the same vector.
    """
    matrix = gram.matrix if isinstance(gram, GramMatrix) else np.asarray(gram, dtype=complex)
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    min_eigenvalue = float(eigenvalues.min())
    if min_eigenvalue < EMBEDDING_FAILURE_THRESHOLD:
        raise GramFactorizationException(
            message="Cannot embed states: Gram matrix has eigenvalue {}".format(min_eigenvalue),
            min_eigenvalue=min_eigenvalue,
        )
    cutoff = EMBEDDING_RELATIVE_CUTOFF * max(float(eigenvalues.max()), 0.0)
    clipped = int(np.count_nonzero(eigenvalues < cutoff))
    if clipped:
        receiver_logger.log(
            level=logging.DEBUG,
            msg="Zeroed {} round-off Gram eigenvalues".format(clipped),
            event=ReceiverEvent.GRAM_EIGENVALUES_CLIPPED,
            context={"min_eigenvalue": min_eigenvalue, "cutoff": cutoff},
        )
    eigenvalues = np.where(eigenvalues < cutoff, 0.0, eigenvalues)
    vectors = np.sqrt(eigenvalues)[:, np.newaxis] * eigenvectors.conj().T
    return EmbeddedStates(vectors=vectors)
