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
Minimum-error discrimination of equiprobable pure coherent states.

The optimal measurement is found with the fixed-point iteration
Pi_i <- L^-1 p_i rho_i Pi_i rho_i p_i L^-1, L = (sum_j p_j^2 rho_j Pi_j rho_j)^(1/2),
started from the uniform POVM.  For pure states every iterate is a rank one
projective measurement whose amplitudes X = M^H B satisfy
X = (D G D)^(1/2) D^-1 with D = diag(|X_ii|) of the previous iterate, so the
loop runs on a 16x16 Hermitian square root per step.  Success probability
never decreases from one iterate to the next.

When some optimal weights vanish the iteration approaches them only
sublinearly.  At geometrically spaced checkpoints the fixed-point equations
d = diag((D G D)^(1/2)) / d are therefore also solved directly with a
quasi-Newton root finder, restricted to the states whose current weight is
above a threshold (the others are set to zero).  A polished candidate is
only accepted through the same residual gate as a plain iterate.

Acceptance is decided by the optimality residual alone: the largest
negative eigenvalue over i of sym(Upsilon) - p_i rho_i, where
Upsilon = sum_j p_j rho_j Pi_j.  A residual eps bounds the gap to the true
optimum by N * eps.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np
import scipy.optimize

from qam_receiver.bounds.gram import EmbeddedStates, GramMatrix, embed_states, gram_matrix_of
from qam_receiver.constellation import Constellation
from qam_receiver.logging.events import ReceiverEvent
from qam_receiver.quantum_core import ComplexAmplitude, coherent_overlap
from qam_receiver.receiver_exception import (
    ConvergenceException,
    InvalidParameterException,
    InvariantViolationException,
)
from qam_receiver.util import receiver_logger, require_positive

DEFAULT_HELSTROM_TOL = 1e-8
DEFAULT_MAX_ITERATIONS = 100_000
RESIDUAL_CHECK_INTERVAL = 20

POLISH_START_ITERATION = 101
POLISH_SUPPORT_THRESHOLDS = (0.0, 1e-6, 1e-4, 1e-3, 1e-2, 3e-2, 1e-1)
POLISH_XTOL = 1e-13
POLISH_MAX_EVALUATIONS_PER_STATE = 100
_LOG_WEIGHT_BOUND = 700.0
_TINY_AMPLITUDE = 1e-300

COMPLETENESS_TOLERANCE = 1e-8
POSITIVITY_TOLERANCE = 1e-10
_SUCCESS_SLACK = 1e-12


@dataclass(frozen=True)
class PovmSolution:
    """
    A measurement on the embedded state space: `operators[i]` is the POVM
    element for deciding state i.
    """

    operators: np.ndarray
    success_probability: float
    residual: float
    iterations: int

    def __post_init__(self):
        count, dim, _ = self.operators.shape
        identity = np.eye(dim)
        completeness_error = float(np.linalg.norm(self.operators.sum(axis=0) - identity, ord=2))
        if completeness_error > COMPLETENESS_TOLERANCE:
            raise InvariantViolationException(
                message="POVM elements do not sum to the identity (error {})".format(completeness_error)
            )
        for index, operator in enumerate(self.operators):
            min_eigenvalue = float(np.linalg.eigvalsh(0.5 * (operator + operator.conj().T)).min())
            if min_eigenvalue < -POSITIVITY_TOLERANCE:
                raise InvariantViolationException(
                    message="POVM element {} is not positive (min eigenvalue {})".format(index, min_eigenvalue)
                )
        if not (1.0 / count - _SUCCESS_SLACK <= self.success_probability <= 1.0 + _SUCCESS_SLACK):
            raise InvariantViolationException(
                message="Success probability {} outside [1/{}, 1]".format(self.success_probability, count)
            )

    @property
    def error_probability(self) -> float:
        return 1.0 - self.success_probability

    def completeness_error(self) -> float:
        dim = self.operators.shape[1]
        return float(np.linalg.norm(self.operators.sum(axis=0) - np.eye(dim), ord=2))

    def min_operator_eigenvalue(self) -> float:
        return min(float(np.linalg.eigvalsh(0.5 * (op + op.conj().T)).min()) for op in self.operators)


def _hermitian_sqrt(matrix: np.ndarray) -> np.ndarray:
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    roots = np.sqrt(np.clip(eigenvalues, 0.0, None))
    return (eigenvectors * roots) @ eigenvectors.conj().T


def _weighted_amplitudes(gram: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """
    diag((D G D)^(1/2)) / d: the success amplitudes <mu_i|psi_i> of the next iterate.
    """
    weighted = weights[:, np.newaxis] * gram * weights[np.newaxis, :]
    return np.real(np.diag(_hermitian_sqrt(weighted))) / weights


def _measurement_basis(states: EmbeddedStates, weights: np.ndarray) -> np.ndarray:
    """
    Unitary polar factor of B D.  Column i is the measurement vector mu_i.
    """
    u, _, vh = np.linalg.svd(states.vectors * weights[np.newaxis, :])
    return u @ vh


def optimality_residual(states: EmbeddedStates, basis: np.ndarray) -> float:
    """
    max_i of the negative part of sym(Upsilon) - p_i rho_i for the
    projective measurement with vectors `basis[:, i]`.
    """
    count = states.count
    prior = 1.0 / count
    vectors = states.vectors
    amplitudes = np.einsum("ki,ki->i", basis.conj(), vectors)
    upsilon = prior * (vectors * amplitudes.conj()[np.newaxis, :]) @ basis.conj().T
    upsilon = 0.5 * (upsilon + upsilon.conj().T)
    worst = 0.0
    for i in range(count):
        psi = vectors[:, i]
        slack = upsilon - prior * np.outer(psi, psi.conj())
        worst = max(worst, -float(np.linalg.eigvalsh(slack).min()))
    return worst


def _solution_from_basis(states: EmbeddedStates, basis: np.ndarray, residual: float, iterations: int) -> PovmSolution:
    operators = np.einsum("ki,li->ikl", basis, basis.conj())
    amplitudes = np.einsum("ki,ki->i", basis.conj(), states.vectors)
    success = float(np.mean(np.abs(amplitudes) ** 2))
    return PovmSolution(operators=operators, success_probability=success, residual=residual, iterations=iterations)


def _support_candidates(weights: np.ndarray) -> Iterator[np.ndarray]:
    """
    Index sets of the states whose weight, relative to the largest, exceeds
    each of `POLISH_SUPPORT_THRESHOLDS`.  Repeated sets are skipped.
    """
    scaled = weights / np.max(weights)
    seen = set()
    for threshold in POLISH_SUPPORT_THRESHOLDS:
        support = np.flatnonzero(scaled > threshold)
        key = tuple(support.tolist())
        if support.size and key not in seen:
            seen.add(key)
            yield support


def _fixed_point_on_support(overlaps: np.ndarray, weights: np.ndarray, support: np.ndarray) -> Optional[np.ndarray]:
    """
    Solve d = diag((D G D)^(1/2)) / d for the states in `support`, every other
    weight held at zero.  The unknowns are log weights, so small weights stay
    positive.  Returns None when the root finder produced no usable point.
    """
    sub_overlaps = overlaps[np.ix_(support, support)]

    def equations(log_weights: np.ndarray) -> np.ndarray:
        bounded = np.clip(log_weights, -_LOG_WEIGHT_BOUND, _LOG_WEIGHT_BOUND)
        with np.errstate(all="ignore"):
            amplitudes = _weighted_amplitudes(sub_overlaps, np.exp(bounded))
        return np.log(np.maximum(amplitudes, _TINY_AMPLITUDE)) - bounded

    try:
        root = scipy.optimize.root(
            equations,
            np.log(weights[support]),
            method="hybr",
            options={"xtol": POLISH_XTOL, "maxfev": POLISH_MAX_EVALUATIONS_PER_STATE * (support.size + 1)},
        )
    except (np.linalg.LinAlgError, ValueError):
        return None
    if not np.all(np.isfinite(root.x)):
        return None
    polished = np.zeros_like(weights)
    polished[support] = np.exp(np.clip(root.x, -_LOG_WEIGHT_BOUND, _LOG_WEIGHT_BOUND))
    return polished


def _polished_solution(
    states: EmbeddedStates, overlaps: np.ndarray, weights: np.ndarray, tol: float, iterations: int
) -> Optional[PovmSolution]:
    for support in _support_candidates(weights):
        polished = _fixed_point_on_support(overlaps, weights, support)
        if polished is None:
            continue
        basis = _measurement_basis(states, polished)
        residual = optimality_residual(states, basis)
        if residual <= tol:
            receiver_logger.debug(
                msg="Polished fixed point accepted",
                event=ReceiverEvent.TRACE,
                context={"support": int(support.size), "residual": residual, "iterations": iterations},
            )
            return _solution_from_basis(states, basis, residual, iterations)
    return None


def solve_min_error_measurement(
    amplitudes: Sequence[ComplexAmplitude],
    tol: float = DEFAULT_HELSTROM_TOL,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> PovmSolution:
    """
    Minimum-error measurement for equiprobable coherent states.

    Raises:
        ConvergenceException: the residual did not reach `tol` within `max_iterations`.
    """
    require_positive(tol, "tol")
    if not amplitudes:
        raise InvalidParameterException(message="At least one state is required")
    if max_iterations < 1:
        raise InvalidParameterException(message="max_iterations must be at least 1, got {}".format(max_iterations))

    gram: GramMatrix = gram_matrix_of(amplitudes)
    states = embed_states(gram)
    overlaps = states.reconstructed_gram()
    weights = np.ones(states.count)

    residual = math.inf
    iterations = 0
    next_polish = POLISH_START_ITERATION
    while iterations < max_iterations:
        iterations += 1
        next_weights = _weighted_amplitudes(overlaps, weights)
        if iterations % RESIDUAL_CHECK_INTERVAL == 1 or iterations == max_iterations:
            basis = _measurement_basis(states, weights)
            residual = optimality_residual(states, basis)
            if residual <= tol:
                return _solution_from_basis(states, basis, residual, iterations)
            if iterations >= next_polish:
                next_polish = 2 * iterations
                polished = _polished_solution(states, overlaps, weights, tol, iterations)
                if polished is not None:
                    return polished
        weights = next_weights

    raise ConvergenceException(
        message="Minimum-error measurement did not converge",
        last_residual=residual,
        iterations=iterations,
    )


@receiver_logger.log_exception(level=logging.ERROR, exception_cls=ConvergenceException)
def helstrom_bound(
    constellation: Constellation,
    tol: float = DEFAULT_HELSTROM_TOL,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> Tuple[float, PovmSolution]:
    """
    Helstrom bound (minimum error probability over all measurements) for the
    16 equiprobable states of `constellation`.
    """
    solution = solve_min_error_measurement(constellation.amplitudes, tol=tol, max_iterations=max_iterations)
    receiver_logger.debug(
        msg="Helstrom bound solved",
        event=ReceiverEvent.HELSTROM_SOLVE_CONVERGED,
        context={
            "nbar": constellation.nbar,
            "iterations": solution.iterations,
            "residual": solution.residual,
            "error": solution.error_probability,
        },
    )
    return solution.error_probability, solution


def square_root_measurement_error(constellation: Constellation) -> float:
    """
    Error of the square-root ("pretty good") measurement.  An upper bound on
    the Helstrom bound, reported only as a sanity value.
    """
    gram = gram_matrix_of(constellation.amplitudes)
    amplitudes = np.real(np.diag(_hermitian_sqrt(gram.matrix)))
    return 1.0 - float(np.mean(amplitudes**2))


def binary_helstrom_error(a: ComplexAmplitude, b: ComplexAmplitude) -> float:
    """
    Closed form Helstrom bound for two equiprobable pure states.
    """
    overlap_sq = abs(coherent_overlap(a, b)) ** 2
    return 0.5 * (1.0 - math.sqrt(max(0.0, 1.0 - overlap_sq)))
