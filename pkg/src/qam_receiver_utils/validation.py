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
The built-in oracle suite behind `qamrx validate`.

Every check compares a computed value against an independent oracle:
closed forms, brute-force enumeration, Monte Carlo sampling, or the
optimality certificates of the Helstrom solution.  All randomness comes
from fixed seeds, so a given build always produces the same report.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

import numpy as np

from qam_receiver import (
    ComplexAmplitude,
    InvalidParameterException,
    NullingOrder,
    RateSequence,
    ReceiverConfig,
    ReceiverEvent,
    ReceiverException,
    binary_helstrom_error,
    build_qam16,
    click_distribution,
    embed_states,
    estimate_error,
    gram_matrix,
    helstrom_bound,
    optimize_beta,
    sample_click_counts,
    solve_min_error_measurement,
    sql_error,
    square_root_measurement_error,
    total_error,
    total_error_exhaustive,
)
from qam_receiver.bounds.helstrom import COMPLETENESS_TOLERANCE, DEFAULT_HELSTROM_TOL, POSITIVITY_TOLERANCE
from qam_receiver.util import receiver_logger

VALIDATION_SEED = 20250101
DEGENERATE_ERROR = 15.0 / 16.0

EXACT_TOLERANCE = 1e-12
CLOSED_FORM_TOLERANCE = 1e-10
BINARY_HELSTROM_TOLERANCE = 1e-9
STANDARD_ERROR_GATE = 4.0

HYPOEXPONENTIAL_DRAWS = 1000
MIN_RATE_GAP = 0.05
CLICK_SAMPLES = 200_000
BINARY_PAIRS = 20
MC_TRIALS = 200_000
MC_NBARS = (0.5, 2.0, 5.0)
CERTIFICATE_NBARS = (0.5, 2.0, 5.0)


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one oracle comparison.  With `one_sided` the check asserts
    got <= expected + tolerance, otherwise |got - expected| <= tolerance.
    """

    name: str
    expected: float
    got: float
    tolerance: float
    one_sided: bool = False
    detail: str = ""

    @property
    def passed(self) -> bool:
        if self.detail or not math.isfinite(self.got):
            return False
        if self.one_sided:
            return self.got <= self.expected + self.tolerance
        return abs(self.got - self.expected) <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        relation = "<=" if self.one_sided else "=="
        text = "{} {}: got {!r} {} expected {!r} (tol {!r})".format(
            status, self.name, self.got, relation, self.expected, self.tolerance
        )
        if self.detail:
            text += " [{}]".format(self.detail)
        return text


@dataclass(frozen=True)
class ValidationReport:
    results: Tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def lines(self) -> List[str]:
        summary = "{} of {} checks passed".format(len(self.results) - len(self.failures()), len(self.results))
        return [result.line() for result in self.results] + [summary]


def hypoexponential_click_probabilities(rates: Sequence[float], duration: float = 1.0) -> Tuple[float, float, float]:
    """
    P(N = 0), P(N = 1), P(N = 2) of the birth process for pairwise distinct
    rates, from the closed-form hypoexponential sum.
    """
    probabilities = []
    for clicks in range(3):
        prefactor = math.prod(rates[:clicks])
        total = 0.0
        for k in range(clicks + 1):
            denominator = math.prod(rates[j] - rates[k] for j in range(clicks + 1) if j != k)
            total += math.exp(-rates[k] * duration) / denominator
        probabilities.append(prefactor * total)
    return probabilities[0], probabilities[1], probabilities[2]


def _random_distinct_rates(rng: np.random.Generator) -> Tuple[float, ...]:
    while True:
        rates = rng.uniform(0.1, 5.0, size=4)
        gaps = np.abs(rates[:, np.newaxis] - rates[np.newaxis, :]) + np.eye(4)
        if gaps.min() >= MIN_RATE_GAP:
            return tuple(float(r) for r in rates)


def _random_amplitude(rng: np.random.Generator) -> ComplexAmplitude:
    re, im = rng.normal(0.0, 1.0, size=2)
    return ComplexAmplitude(re=float(re), im=float(im))


def check_degenerate_anchor(scale: float) -> List[CheckResult]:
    helstrom_error, _ = helstrom_bound(build_qam16(0.0))
    return [
        CheckResult(
            "type1 error at nbar=0", DEGENERATE_ERROR, total_error(ReceiverConfig.type_i(0.0)), EXACT_TOLERANCE * scale
        ),
        CheckResult("sql error at nbar=0", DEGENERATE_ERROR, sql_error(0.0), EXACT_TOLERANCE * scale),
        CheckResult("helstrom at nbar=0", DEGENERATE_ERROR, helstrom_error, EXACT_TOLERANCE * scale, one_sided=True),
    ]


def check_click_closed_forms(scale: float) -> List[CheckResult]:
    rng = np.random.default_rng(VALIDATION_SEED)
    worst = 0.0
    for _ in range(HYPOEXPONENTIAL_DRAWS):
        rates = _random_distinct_rates(rng)
        analytic = click_distribution(RateSequence.of(rates))
        oracle = hypoexponential_click_probabilities(rates)
        worst = max(worst, max(abs(analytic[n] - oracle[n]) for n in range(3)))

    single_stage = click_distribution(RateSequence.of((2.0, 0.0, 0.0, 0.0)))
    single_stage_error = max(abs(single_stage.p0 - math.exp(-2.0)), abs(single_stage.p1 - (1.0 - math.exp(-2.0))))
    return [
        CheckResult("click distribution vs hypoexponential sum", 0.0, worst, CLOSED_FORM_TOLERANCE * scale),
        CheckResult("single stage click split", 0.0, single_stage_error, EXACT_TOLERANCE * scale),
    ]


def check_click_monte_carlo(scale: float) -> List[CheckResult]:
    rates = RateSequence.of((1.0, 2.0, 3.0, 4.0))
    analytic = click_distribution(rates).as_array()
    counts = np.bincount(
        sample_click_counts(np.random.default_rng(VALIDATION_SEED), rates, CLICK_SAMPLES), minlength=4
    )
    frequencies = counts / CLICK_SAMPLES
    standard_errors = np.sqrt(analytic * (1.0 - analytic) / CLICK_SAMPLES)
    worst_z = float(np.max(np.abs(frequencies - analytic) / standard_errors))
    return [CheckResult("click distribution vs sampling (std errors)", 0.0, worst_z, STANDARD_ERROR_GATE * scale)]


def check_helstrom_harnesses(scale: float) -> List[CheckResult]:
    rng = np.random.default_rng(VALIDATION_SEED)
    worst = 0.0
    for _ in range(BINARY_PAIRS):
        a, b = _random_amplitude(rng), _random_amplitude(rng)
        solved = solve_min_error_measurement([a, b]).error_probability
        worst = max(worst, abs(solved - binary_helstrom_error(a, b)))

    single = solve_min_error_measurement([_random_amplitude(rng)]).error_probability
    return [
        CheckResult("binary helstrom vs closed form", 0.0, worst, BINARY_HELSTROM_TOLERANCE * scale),
        CheckResult("single state helstrom", 0.0, single, EXACT_TOLERANCE * scale),
    ]


def check_povm_certificates(scale: float) -> List[CheckResult]:
    results = []
    for nbar in CERTIFICATE_NBARS:
        constellation = build_qam16(nbar)
        helstrom_error, solution = helstrom_bound(constellation)
        states = embed_states(gram_matrix(constellation))
        reconstruction = float(np.max(np.abs(states.reconstructed_gram() - gram_matrix(constellation).matrix)))
        results += [
            CheckResult(
                "povm completeness at nbar={}".format(nbar),
                0.0,
                solution.completeness_error(),
                COMPLETENESS_TOLERANCE * scale,
            ),
            CheckResult(
                "povm positivity at nbar={}".format(nbar),
                0.0,
                -solution.min_operator_eigenvalue(),
                POSITIVITY_TOLERANCE * scale,
                one_sided=True,
            ),
            CheckResult(
                "optimality residual at nbar={}".format(nbar),
                0.0,
                solution.residual,
                DEFAULT_HELSTROM_TOL * scale,
                one_sided=True,
            ),
            CheckResult(
                "helstrom below square-root measurement at nbar={}".format(nbar),
                square_root_measurement_error(constellation),
                helstrom_error,
                EXACT_TOLERANCE * scale,
                one_sided=True,
            ),
            CheckResult("gram factorization at nbar={}".format(nbar), 0.0, reconstruction, EXACT_TOLERANCE * scale),
        ]
    return results


def check_receiver_identities(scale: float) -> List[CheckResult]:
    results = []
    for nbar, beta in ((0.5, 0.0), (2.0, 0.3), (5.0, -0.4)):
        config = ReceiverConfig.type_ii(nbar, beta)
        results.append(
            CheckResult(
                "factorized vs exhaustive error at nbar={}, beta={}".format(nbar, beta),
                total_error_exhaustive(config),
                total_error(config),
                EXACT_TOLERANCE * scale,
            )
        )
    ascending = total_error(ReceiverConfig.type_ii(2.0, 0.37, NullingOrder.ASCENDING))
    descending = total_error(ReceiverConfig.type_ii(2.0, -0.37, NullingOrder.DESCENDING))
    results.append(CheckResult("nulling order reflection", ascending, descending, EXACT_TOLERANCE * scale))
    return results


def _monte_carlo_check(name: str, config: ReceiverConfig, scale: float) -> CheckResult:
    analytic = total_error(config)
    estimate = estimate_error(config, trials=MC_TRIALS, seed=VALIDATION_SEED)
    standard_error = math.sqrt(analytic * (1.0 - analytic) / MC_TRIALS)
    return CheckResult(name, 0.0, abs(estimate.p_hat - analytic) / standard_error, STANDARD_ERROR_GATE * scale)


def check_monte_carlo_vs_analytic(scale: float) -> List[CheckResult]:
    results = [
        _monte_carlo_check(
            "monte carlo vs analytic at nbar={}, beta=0 (std errors)".format(nbar), ReceiverConfig.type_i(nbar), scale
        )
        for nbar in MC_NBARS
    ]
    beta_star = optimize_beta(2.0).beta_star
    results.append(
        _monte_carlo_check(
            "monte carlo vs analytic at nbar=2, beta*={!r} (std errors)".format(beta_star),
            ReceiverConfig.type_ii(2.0, beta_star),
            scale,
        )
    )
    return results


CHECKS: Tuple[Callable[[float], List[CheckResult]], ...] = (
    check_degenerate_anchor,
    check_click_closed_forms,
    check_click_monte_carlo,
    check_helstrom_harnesses,
    check_povm_certificates,
    check_receiver_identities,
    check_monte_carlo_vs_analytic,
)


def run_validation(tolerance_scale: float = 1.0) -> ValidationReport:
    """
    Run every oracle check with its tolerances multiplied by
    `tolerance_scale`.  A check that raises is reported as failed.
    """
    if not (math.isfinite(tolerance_scale) and tolerance_scale >= 0.0):
        raise InvalidParameterException(
            message="tolerance_scale must be finite and non-negative, got {}".format(tolerance_scale)
        )

    results: List[CheckResult] = []
    for check in CHECKS:
        try:
            results += check(tolerance_scale)
        except ReceiverException as re:
            receiver_logger.log(level=logging.ERROR, exception=re, context={"check": check.__name__})
            results.append(CheckResult(check.__name__, 0.0, math.nan, 0.0, detail=str(re)))

    for result in results:
        receiver_logger.log(
            level=logging.DEBUG if result.passed else logging.WARNING,
            msg=result.line(),
            event=ReceiverEvent.VALIDATION_CHECK_PASSED if result.passed else ReceiverEvent.VALIDATION_CHECK_FAILED,
            context={"check": result.name, "expected": result.expected, "got": result.got, "tol": result.tolerance},
        )
    return ValidationReport(results=tuple(results))
