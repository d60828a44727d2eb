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

from qam_receiver import ReceiverException, optimize_beta

from qam_receiver_utils.constants import DEFAULT_BETA_TOL
from qam_receiver_utils.sweep import OPTIMIZE_HEADER
from qam_receiver_utils.sweep_config import SweepConfigFile

from .options import opt_beta_tol, opt_config, opt_nbar, opt_out
from .util import ReceiverUsageException, emit_csv, recast_exceptions_to_click


@click.command("optimize")
@opt_nbar()
@opt_beta_tol()
@opt_out()
@opt_config()
@recast_exceptions_to_click(ReceiverException, OSError)
def cmd_optimize(nbar, beta_tol, out, config_file):
    """
    Find the displacement minimizing the Type II error at one photon number.

    Prints nbar, beta_star, beta_star_sq, error_at_beta and error_at_zero as
    a single CSV row with a header.
    """
    config = SweepConfigFile(file_path=config_file)
    nbar = config.effective_conf_value("nbar", nbar, None)
    if nbar is None:
        raise ReceiverUsageException("Missing option '--nbar'.")
    beta_tol = config.effective_conf_value("beta_tol", beta_tol, DEFAULT_BETA_TOL)
    out = config.effective_conf_value("out", out, None)

    result = optimize_beta(float(nbar), tol=float(beta_tol))
    row = (result.nbar, result.beta_star, result.beta_star_sq, result.error_at_beta, result.error_at_zero)
    emit_csv(OPTIMIZE_HEADER, [row], out)
