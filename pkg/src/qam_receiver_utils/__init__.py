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
# The receiver lab utilities package: `qam_receiver_utils`

Higher level tooling on top of the [qam_receiver][] library:

- [qam_receiver_utils.SweepSpec][] & [qam_receiver_utils.run_sweep][] - Photon
    number sweeps producing one [qam_receiver_utils.SweepRecord][] per grid
    point, evaluated in parallel and returned in grid order.
- [qam_receiver_utils.SweepConfigFile][] - The optional `key=value`
    configuration file, resolved under command line flags.
- [qam_receiver_utils.run_validation][] - The oracle suite.
- `qamrx` - The command line utility, implemented with
    [click](https://click.palletsprojects.com/en/stable/).
"""

from .constants import ExitCode, Spacing
from .csv_output import render_csv, write_csv_atomic
from .sweep import (
    BoundsRecord,
    SimulationRecord,
    SweepRecord,
    SweepSpec,
    run_bounds,
    run_simulation,
    run_sweep,
)
from .sweep_config import SweepConfigException, SweepConfigFile, resolve_sweep_spec
from .validation import CheckResult, ValidationReport, run_validation
from .commands.cli.main import cmd_qamrx, cmd_qamrx_version
from .commands.cli.sweep_cmd import cmd_bounds, cmd_simulate, cmd_sweep
from .commands.cli.optimize_cmd import cmd_optimize
from .commands.cli.validate_cmd import cmd_validate

__all__ = [
    "BoundsRecord",
    "CheckResult",
    "ExitCode",
    "SimulationRecord",
    "Spacing",
    "SweepConfigException",
    "SweepConfigFile",
    "SweepRecord",
    "SweepSpec",
    "ValidationReport",
    "cmd_bounds",
    "cmd_optimize",
    "cmd_qamrx",
    "cmd_qamrx_version",
    "cmd_simulate",
    "cmd_sweep",
    "cmd_validate",
    "render_csv",
    "resolve_sweep_spec",
    "run_bounds",
    "run_simulation",
    "run_sweep",
    "run_validation",
    "write_csv_atomic",
]
