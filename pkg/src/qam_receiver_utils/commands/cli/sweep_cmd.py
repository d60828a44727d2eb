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

import click

from qam_receiver import ReceiverException

from qam_receiver_utils.constants import DEFAULT_SIMULATE_TRIALS, DEFAULT_TRIALS
from qam_receiver_utils.sweep import (
    BoundsRecord,
    SimulationRecord,
    SweepRecord,
    run_bounds,
    run_simulation,
    run_sweep,
)
from qam_receiver_utils.sweep_config import SweepConfigFile, resolve_sweep_spec

from .options import (
    opt_beta_tol,
    opt_helstrom_tol,
    opt_out,
    opt_seed,
    opt_sweep_grid,
    opt_trials,
)
from .util import ReceiverUsageException, emit_csv, recast_exceptions_to_click


@click.command("sweep")
@opt_sweep_grid()
@opt_trials(default_help=DEFAULT_TRIALS)
@opt_seed()
@opt_beta_tol()
@opt_helstrom_tol()
@opt_out()
@recast_exceptions_to_click(ReceiverException, OSError)
def cmd_sweep(
    config_file, nbar_min, nbar_max, points, spacing, workers, trials, seed, beta_tol, helstrom_tol, out
):
    """
    Sweep the mean photon number and tabulate every curve.

    One CSV row per grid point: the Type I and Type II errors, the optimal
    displacement, the standard quantum limit and the Helstrom bound.  With
    --trials > 0, Monte Carlo estimates of both receiver types are
    appended.
    """
    spec = resolve_sweep_spec(
        SweepConfigFile(file_path=config_file),
        nbar_min=nbar_min,
        nbar_max=nbar_max,
        points=points,
        spacing=spacing,
        trials=trials,
        seed=seed,
        beta_tol=beta_tol,
        helstrom_tol=helstrom_tol,
        workers=workers,
        out=out,
    )
    records = run_sweep(spec)
    emit_csv(SweepRecord.csv_header(spec.with_monte_carlo), [record.csv_row() for record in records], spec.output)


@click.command("bounds")
@opt_sweep_grid()
@opt_helstrom_tol()
@opt_out()
@recast_exceptions_to_click(ReceiverException, OSError)
def cmd_bounds(config_file, nbar_min, nbar_max, points, spacing, workers, helstrom_tol, out):
    """
    Tabulate the standard quantum limit and the Helstrom bound.
    """
    spec = resolve_sweep_spec(
        SweepConfigFile(file_path=config_file),
        nbar_min=nbar_min,
        nbar_max=nbar_max,
        points=points,
        spacing=spacing,
        trials=0,
        helstrom_tol=helstrom_tol,
        workers=workers,
        out=out,
    )
    records = run_bounds(spec)
    emit_csv(BoundsRecord.csv_header(), [record.csv_row() for record in records], spec.output)


@click.command("simulate")
@opt_sweep_grid()
@opt_trials(default_help=DEFAULT_SIMULATE_TRIALS)
@opt_seed()
@opt_beta_tol()
@opt_out()
@recast_exceptions_to_click(ReceiverException, OSError)
def cmd_simulate(config_file, nbar_min, nbar_max, points, spacing, workers, trials, seed, beta_tol, out):
    """
    Monte Carlo estimates of the Type I and Type II errors.

    The Type II displacement at each grid point is the optimized one.
    Estimates come with Wilson 95% intervals.
    """
    spec = resolve_sweep_spec(
        SweepConfigFile(file_path=config_file),
        nbar_min=nbar_min,
        nbar_max=nbar_max,
        points=points,
        spacing=spacing,
        trials=trials,
        seed=seed,
        beta_tol=beta_tol,
        workers=workers,
        out=out,
        default_trials=DEFAULT_SIMULATE_TRIALS,
    )
    if not spec.with_monte_carlo:
        raise ReceiverUsageException("simulate requires --trials > 0")
    records = run_simulation(spec)
    emit_csv(SimulationRecord.csv_header(), [record.csv_row() for record in records], spec.output)
