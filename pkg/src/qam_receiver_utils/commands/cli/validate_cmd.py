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

from qam_receiver_utils.validation import run_validation

from .options import opt_tolerance_scale
from .util import ValidationFailedException, recast_exceptions_to_click


@click.command("validate")
@opt_tolerance_scale()
@recast_exceptions_to_click(ReceiverException)
def cmd_validate(tolerance_scale):
    """
    Run the built-in oracle suite and report each check.

    Checks cover the click statistics against their closed form and against
    sampling, the Helstrom solver against the two state closed form and its
    optimality certificates, the factorized receiver error against brute
    force enumeration, and the analytic error against Monte Carlo.
    """
    report = run_validation(tolerance_scale=tolerance_scale)
    for line in report.lines():
        click.echo(line)
    if not report.passed:
        raise ValidationFailedException("{} validation check(s) failed".format(len(report.failures())))
