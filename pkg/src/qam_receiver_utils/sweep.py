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
Photon number sweeps: the grid, the per-point records, and their parallel
evaluation.  Records come back in grid order whatever the worker count, and
Monte Carlo columns are a pure function of the spec, so a sweep is
reproducible to the byte.
"""

from __future__ import annotations

import functools
import pathlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from qam_receiver import (
    ErrorEstimate,
    InvalidParameterException,
    InvariantViolationException,
    ReceiverConfig,
    ReceiverEvent,
    build_qam16,
    estimate_error,
    helstrom_bound,
    optimize_beta,
    sql_error,
    total_error,
)
from qam_receiver.util import receiver_logger, require_photon_number, require_positive

from qam_receiver_utils.constants import (
    DEFAULT_BETA_TOL,
    DEFAULT_HELSTROM_TOL,
    DEFAULT_NBAR_MAX,
    DEFAULT_NBAR_MIN,
    DEFAULT_POINTS,
    DEFAULT_SEED,
    DEFAULT_SPACING,
    DEFAULT_TRIALS,
    DEFAULT_WORKERS,
    HELSTROM_ORDERING_SLACK,
    TYPE_ORDERING_SLACK,
    Spacing,
)

MC_HEADER = (
    "mc_type1_phat",
    "mc_type1_ci_low",
    "mc_type1_ci_high",
    "mc_type2_phat",
    "mc_type2_ci_low",
    "mc_type2_ci_high",
)
SWEEP_HEADER = ("nbar", "type1_error", "type2_error", "beta_star", "beta_star_sq", "sql_error", "helstrom_error")
BOUNDS_HEADER = ("nbar", "sql_error", "helstrom_error")
SIMULATE_HEADER = ("nbar", "beta_star") + MC_HEADER
OPTIMIZE_HEADER = ("nbar", "beta_star", "beta_star_sq", "error_at_beta", "error_at_zero")

MIN_POINTS = 2


@dataclass(frozen=True)
class SweepSpec:
    nbar_min: float = DEFAULT_NBAR_MIN
    nbar_max: float = DEFAULT_NBAR_MAX
    points: int = DEFAULT_POINTS
    spacing: Spacing = DEFAULT_SPACING
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    beta_tol: float = DEFAULT_BETA_TOL
    helstrom_tol: float = DEFAULT_HELSTROM_TOL
    workers: int = DEFAULT_WORKERS
    output: Optional[pathlib.Path] = None

    def __post_init__(self):
        require_photon_number(self.nbar_min, "nbar_min")
        require_photon_number(self.nbar_max, "nbar_max")
        if not self.nbar_max > self.nbar_min:
            raise InvalidParameterException(
                message="nbar_max ({}) must be greater than nbar_min ({})".format(self.nbar_max, self.nbar_min)
            )
        if self.spacing == Spacing.LOG and not self.nbar_min > 0:
            raise InvalidParameterException(message="Log spacing requires nbar_min > 0, got {}".format(self.nbar_min))
        if self.points < MIN_POINTS:
            raise InvalidParameterException(
                message="points must be at least {}, got {}".format(MIN_POINTS, self.points)
            )
        if self.trials < 0:
            raise InvalidParameterException(message="trials must be non-negative, got {}".format(self.trials))
        if self.seed < 0:
            raise InvalidParameterException(message="seed must be non-negative, got {}".format(self.seed))
        if self.workers < 1:
            raise InvalidParameterException(message="workers must be at least 1, got {}".format(self.workers))
        require_positive(self.beta_tol, "beta_tol")
        require_positive(self.helstrom_tol, "helstrom_tol")

    @property
    def with_monte_carlo(self) -> bool:
        return self.trials > 0

    def grid(self) -> np.ndarray:
        """
        Photon numbers of the sweep, endpoints included exactly.
        """
        if self.spacing == Spacing.LOG:
            grid = np.geomspace(self.nbar_min, self.nbar_max, self.points)
        else:
            grid = np.linspace(self.nbar_min, self.nbar_max, self.points)
        grid[0], grid[-1] = self.nbar_min, self.nbar_max
        return grid


def _mc_fields(mc_type1: Optional[ErrorEstimate], mc_type2: Optional[ErrorEstimate]) -> Tuple[float, ...]:
    if mc_type1 is None or mc_type2 is None:
        return ()
    return (
        mc_type1.p_hat,
        mc_type1.ci_low,
        mc_type1.ci_high,
        mc_type2.p_hat,
        mc_type2.ci_low,
        mc_type2.ci_high,
    )


@dataclass(frozen=True)
class SweepRecord:
    """
    One row of the sweep CSV.  `nbar` is the total mean photon number of the
    input symbol, before the beam splitter.
    """

    nbar: float
    type1_error: float
    type2_error: float
    beta_star: float
    beta_star_sq: float
    sql_error: float
    helstrom_error: float
    mc_type1: Optional[ErrorEstimate] = None
    mc_type2: Optional[ErrorEstimate] = None

    def __post_init__(self):
        if (self.mc_type1 is None) != (self.mc_type2 is None):
            raise InvariantViolationException(message="Monte Carlo estimates must be given for both receiver types")
        ceiling = min(self.type1_error, self.type2_error, self.sql_error) + HELSTROM_ORDERING_SLACK
        if not self.helstrom_error <= ceiling:
            raise InvariantViolationException(
                message="Helstrom bound {} exceeds a receiver error at nbar = {}".format(
                    self.helstrom_error, self.nbar
                )
            )
        if not self.type2_error <= self.type1_error + TYPE_ORDERING_SLACK:
            raise InvariantViolationException(
                message="Type II error {} exceeds Type I error {} at nbar = {}".format(
                    self.type2_error, self.type1_error, self.nbar
                )
            )

    @staticmethod
    def csv_header(with_monte_carlo: bool) -> Tuple[str, ...]:
        return SWEEP_HEADER + MC_HEADER if with_monte_carlo else SWEEP_HEADER

    def csv_row(self) -> Tuple[float, ...]:
        return (
            self.nbar,
            self.type1_error,
            self.type2_error,
            self.beta_star,
            self.beta_star_sq,
            self.sql_error,
            self.helstrom_error,
        ) + _mc_fields(self.mc_type1, self.mc_type2)


@dataclass(frozen=True)
class BoundsRecord:
    nbar: float
    sql_error: float
    helstrom_error: float

    def __post_init__(self):
        if not self.helstrom_error <= self.sql_error + HELSTROM_ORDERING_SLACK:
            raise InvariantViolationException(
                message="Helstrom bound {} exceeds the SQL {} at nbar = {}".format(
                    self.helstrom_error, self.sql_error, self.nbar
                )
            )

    @staticmethod
    def csv_header(with_monte_carlo: bool = False) -> Tuple[str, ...]:
        return BOUNDS_HEADER

    def csv_row(self) -> Tuple[float, ...]:
        return self.nbar, self.sql_error, self.helstrom_error


@dataclass(frozen=True)
class SimulationRecord:
    nbar: float
    beta_star: float
    mc_type1: ErrorEstimate
    mc_type2: ErrorEstimate

    @staticmethod
    def csv_header(with_monte_carlo: bool = True) -> Tuple[str, ...]:
        return SIMULATE_HEADER

    def csv_row(self) -> Tuple[float, ...]:
        return (self.nbar, self.beta_star) + _mc_fields(self.mc_type1, self.mc_type2)


def _monte_carlo_pair(nbar: float, beta_star: float, spec: SweepSpec) -> Tuple[ErrorEstimate, ErrorEstimate]:
    # Both receiver types and every grid point share the seed.
    mc_type1 = estimate_error(ReceiverConfig.type_i(nbar), trials=spec.trials, seed=spec.seed)
    mc_type2 = estimate_error(ReceiverConfig.type_ii(nbar, beta_star), trials=spec.trials, seed=spec.seed)
    return mc_type1, mc_type2


def sweep_point(nbar: float, spec: SweepSpec) -> SweepRecord:
    type1_error = total_error(ReceiverConfig.type_i(nbar))
    beta = optimize_beta(nbar, tol=spec.beta_tol)
    helstrom_error, _ = helstrom_bound(build_qam16(nbar), tol=spec.helstrom_tol)
    mc_type1, mc_type2 = _monte_carlo_pair(nbar, beta.beta_star, spec) if spec.with_monte_carlo else (None, None)
    return SweepRecord(
        nbar=nbar,
        type1_error=type1_error,
        type2_error=beta.error_at_beta,
        beta_star=beta.beta_star,
        beta_star_sq=beta.beta_star_sq,
        sql_error=sql_error(nbar),
        helstrom_error=helstrom_error,
        mc_type1=mc_type1,
        mc_type2=mc_type2,
    )


def bounds_point(nbar: float, spec: SweepSpec) -> BoundsRecord:
    helstrom_error, _ = helstrom_bound(build_qam16(nbar), tol=spec.helstrom_tol)
    return BoundsRecord(nbar=nbar, sql_error=sql_error(nbar), helstrom_error=helstrom_error)


def simulation_point(nbar: float, spec: SweepSpec) -> SimulationRecord:
    if not spec.with_monte_carlo:
        raise InvalidParameterException(message="Simulation requires trials > 0")
    beta = optimize_beta(nbar, tol=spec.beta_tol)
    mc_type1, mc_type2 = _monte_carlo_pair(nbar, beta.beta_star, spec)
    return SimulationRecord(nbar=nbar, beta_star=beta.beta_star, mc_type1=mc_type1, mc_type2=mc_type2)


RecordType = TypeVar("RecordType")


def _evaluate(point: Callable[..., RecordType], nbars: Sequence[float], spec: SweepSpec) -> Iterator[RecordType]:
    task = functools.partial(point, spec=spec)
    if spec.workers == 1:
        yield from map(task, nbars)
    else:
        with ProcessPoolExecutor(max_workers=spec.workers) as executor:
            yield from executor.map(task, nbars)


def run_grid(spec: SweepSpec, point: Callable[..., RecordType]) -> List[RecordType]:
    """
    Evaluate `point(nbar, spec=spec)` over the sweep grid, on a process pool
    when more than one worker is requested.
    """
    nbars = [float(nbar) for nbar in spec.grid()]
    records = []
    for record, nbar in zip(_evaluate(point, nbars, spec), nbars):
        receiver_logger.debug(
            msg="Sweep point complete", event=ReceiverEvent.SWEEP_POINT_COMPLETE, context={"nbar": nbar}
        )
        records.append(record)
    return records


def run_sweep(spec: SweepSpec) -> List[SweepRecord]:
    return run_grid(spec, sweep_point)


def run_bounds(spec: SweepSpec) -> List[BoundsRecord]:
    return run_grid(spec, bounds_point)


def run_simulation(spec: SweepSpec) -> List[SimulationRecord]:
    return run_grid(spec, simulation_point)

