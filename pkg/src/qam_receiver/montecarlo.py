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
End-to-end stochastic simulation of the hybrid receiver, independent of the
analytic engine in `qam_receiver.receiver`.

Clicks are simulated by exponential inter-arrival sampling with the rate of
the current nulling stage, which is exact for piecewise-constant rates.

Reproducibility: trials are grouped in blocks of `BLOCK_SIZE`; block b
always draws from the stream seeded by SeedSequence(seed, spawn_key=(b,)).
The trial to stream mapping therefore does not depend on how blocks are
distributed over worker processes, and error counts are integer sums.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
import scipy.stats

from qam_receiver.constellation import QAM16_ROWS, QAM16_SYMBOLS, Constellation, build_qam16, nulling_sequence, split
from qam_receiver.logging.events import ReceiverEvent
from qam_receiver.quantum_core import CLICK_STATES, HOMODYNE_VARIANCE, RateSequence
from qam_receiver.receiver import ReceiverConfig, decide_column
from qam_receiver.receiver_exception import InvalidParameterException
from qam_receiver.util import receiver_logger

BLOCK_SIZE = 1 << 16
DEFAULT_CONFIDENCE = 0.95
_MAX_COUNTED_CLICKS = CLICK_STATES - 1


@dataclass(frozen=True)
class TrialOutcome:
    true_symbol: int
    decided_symbol: int
    clicks: int
    row_decided: int

    @property
    def is_error(self) -> bool:
        return self.true_symbol != self.decided_symbol


@dataclass(frozen=True)
class ErrorEstimate:
    p_hat: float
    trials: int
    errors: int
    ci_low: float
    ci_high: float
    seed: int


@dataclass(frozen=True)
class _ReceiverModel:
    """
    Arrays the simulation needs, precomputed once per configuration.
    """

    arm: np.ndarray
    row_means: np.ndarray
    sequences: np.ndarray
    candidates: np.ndarray
    beta: float

    @staticmethod
    def of(config: ReceiverConfig) -> _ReceiverModel:
        constellation: Constellation = build_qam16(config.nbar)
        _, nulling_arm = split(constellation)
        arm = np.array([a.as_complex() for a in nulling_arm.amplitudes])
        sequences = np.array([nulling_sequence(row, config.order) for row in range(1, QAM16_ROWS + 1)])
        return _ReceiverModel(
            arm=arm,
            row_means=nulling_arm.row_means(),
            sequences=sequences,
            candidates=arm[sequences],
            beta=config.beta,
        )

    def decide_rows(self, homodyne: np.ndarray) -> np.ndarray:
        """
        0-based nearest-mean row decisions; ties go to the lower row.
        """
        return np.argmin(np.abs(homodyne[:, np.newaxis] - self.row_means[np.newaxis, :]), axis=1)

    def stage_rates(self, true_symbols: np.ndarray, rows: np.ndarray) -> np.ndarray:
        residues = self.arm[true_symbols][:, np.newaxis] - self.candidates[rows] + self.beta
        return np.abs(residues) ** 2


def _count_clicks(rates: np.ndarray, exponentials: np.ndarray) -> np.ndarray:
    """
    Clicks inside the unit interval, counting at most three.  `rates` and
    `exponentials` are (n, stages) arrays; a zero rate stops the count.
    """
    stages = min(rates.shape[1], _MAX_COUNTED_CLICKS)
    with np.errstate(divide="ignore"):
        gaps = np.where(rates[:, :stages] > 0.0, exponentials[:, :stages] / rates[:, :stages], np.inf)
    arrivals = np.cumsum(gaps, axis=1)
    return np.count_nonzero(arrivals < 1.0, axis=1)


def sample_click_counts(rng: np.random.Generator, rates: RateSequence, size: int) -> np.ndarray:
    """
    Sample click counts (3 meaning three or more) of the birth process with
    the given stage rates over a unit interval.
    """
    if size < 1:
        raise InvalidParameterException(message="size must be at least 1, got {}".format(size))
    if not isinstance(rates, RateSequence):
        rates = RateSequence.of(rates)
    stage_rates = np.broadcast_to(np.array(rates.rates[:_MAX_COUNTED_CLICKS]), (size, _MAX_COUNTED_CLICKS))
    exponentials = rng.standard_exponential((size, _MAX_COUNTED_CLICKS))
    return _count_clicks(stage_rates, exponentials)


def simulate_trial(rng: np.random.Generator, config: ReceiverConfig) -> TrialOutcome:
    """
    Simulate one symbol through the full protocol: uniform symbol, homodyne
    row decision, feed-forward sequential nulling with the true (possibly
    wrong-row) residues, and the min(N + 1, 4) column rule.
    """
    model = _ReceiverModel.of(config)
    true_symbol = int(rng.integers(QAM16_SYMBOLS))
    alpha = model.arm[true_symbol]
    homodyne = rng.normal(alpha.imag, math.sqrt(HOMODYNE_VARIANCE))
    row = int(model.decide_rows(np.array([homodyne]))[0])
    rates = model.stage_rates(np.array([true_symbol]), np.array([row]))[0]

    clicks = 0
    elapsed = 0.0
    while clicks < _MAX_COUNTED_CLICKS:
        rate = rates[clicks]
        if rate <= 0.0:
            break
        elapsed += rng.exponential(1.0 / rate)
        if elapsed >= 1.0:
            break
        clicks += 1

    decided_symbol = int(model.sequences[row, decide_column(clicks) - 1])
    return TrialOutcome(true_symbol=true_symbol, decided_symbol=decided_symbol, clicks=clicks, row_decided=row + 1)


def simulate_block(rng: np.random.Generator, config: ReceiverConfig, size: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized equivalent of `size` calls to `simulate_trial`.  Returns
    (true symbols, decided symbols).
    """
    model = _ReceiverModel.of(config)
    true_symbols = rng.integers(QAM16_SYMBOLS, size=size)
    homodyne = model.arm[true_symbols].imag + rng.normal(0.0, math.sqrt(HOMODYNE_VARIANCE), size=size)
    rows = model.decide_rows(homodyne)
    rates = model.stage_rates(true_symbols, rows)
    clicks = _count_clicks(rates, rng.standard_exponential((size, _MAX_COUNTED_CLICKS)))
    decided = model.sequences[rows, np.minimum(clicks + 1, 4) - 1]
    return true_symbols, decided


def block_stream(seed: int, block: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(block,)))


def _block_errors(config: ReceiverConfig, seed: int, block: int, size: int) -> int:
    true_symbols, decided = simulate_block(block_stream(seed, block), config, size)
    return int(np.count_nonzero(true_symbols != decided))


def _block_sizes(trials: int) -> Sequence[int]:
    full, rest = divmod(trials, BLOCK_SIZE)
    return [BLOCK_SIZE] * full + ([rest] if rest else [])


def wilson_interval(errors: int, trials: int, confidence: float = DEFAULT_CONFIDENCE) -> Tuple[float, float]:
    """
    Wilson score interval for a binomial proportion.
    """
    if trials < 1:
        raise InvalidParameterException(message="trials must be at least 1, got {}".format(trials))
    if not 0 <= errors <= trials:
        raise InvalidParameterException(message="errors must lie in [0, trials], got {}".format(errors))
    z = float(scipy.stats.norm.ppf(0.5 + 0.5 * confidence))
    p_hat = errors / trials
    z2n = z * z / trials
    center = (p_hat + 0.5 * z2n) / (1.0 + z2n)
    half_width = z / (1.0 + z2n) * math.sqrt(p_hat * (1.0 - p_hat) / trials + 0.25 * z2n / trials)
    ci_low = min(max(center - half_width, 0.0), p_hat)
    ci_high = max(min(center + half_width, 1.0), p_hat)
    return ci_low, ci_high


def estimate_error(config: ReceiverConfig, trials: int, seed: int, workers: int = 1) -> ErrorEstimate:
    """
    Monte Carlo symbol error estimate with a Wilson 95% interval.  The result
    is a pure function of (config, trials, seed); `workers` only changes how
    fast it is computed.
    """
    if trials < 1:
        raise InvalidParameterException(message="trials must be at least 1, got {}".format(trials))
    if seed < 0:
        raise InvalidParameterException(message="seed must be non-negative, got {}".format(seed))
    if workers < 1:
        raise InvalidParameterException(message="workers must be at least 1, got {}".format(workers))

    sizes = _block_sizes(trials)
    blocks = range(len(sizes))
    if workers == 1 or len(sizes) == 1:
        errors = sum(_block_errors(config, seed, block, size) for block, size in zip(blocks, sizes))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            errors = sum(
                executor.map(_block_errors, [config] * len(sizes), [seed] * len(sizes), blocks, sizes)
            )

    ci_low, ci_high = wilson_interval(errors, trials)
    estimate = ErrorEstimate(
        p_hat=errors / trials, trials=trials, errors=errors, ci_low=ci_low, ci_high=ci_high, seed=seed
    )
    receiver_logger.debug(
        msg="Monte Carlo estimate complete",
        event=ReceiverEvent.SIMULATION_COMPLETE,
        context={"nbar": config.nbar, "beta": config.beta, "trials": trials, "errors": errors, "seed": seed},
    )
    return estimate
