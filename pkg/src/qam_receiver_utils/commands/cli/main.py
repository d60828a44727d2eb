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
import logging
import importlib.metadata
import sys

from qam_receiver import setStructuredLogging

from qam_receiver_utils.constants import ExitCode

from .options import opt_loglevel
from .optimize_cmd import cmd_optimize
from .sweep_cmd import cmd_bounds, cmd_simulate, cmd_sweep
from .validate_cmd import cmd_validate


class QamrxGroup(click.Group):
    """
    Command group that reports command line usage errors with the `qamrx`
    usage exit code rather than click's default.
    """

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as ue:
            ue.exit_code = ExitCode.USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as ue:
            ue.exit_code = ExitCode.USAGE
            raise


@click.group("qamrx", cls=QamrxGroup, invoke_without_command=True, help="Hybrid 16-QAM receiver numerical lab")
@opt_loglevel()
@click.pass_context
def cmd_qamrx(ctx, loglevel):
    """
    Hybrid 16-QAM receiver commands
    """
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        sys.exit(0)

    setStructuredLogging(nested_key=None)
    logging.basicConfig(level=loglevel.upper())


@cmd_qamrx.command("version")
def cmd_qamrx_version():
    """
    Show the version of the receiver lab and its numerical stack.
    """

    def _pkg_display_version(pkg_name):
        try:
            return importlib.metadata.version(pkg_name)
        except importlib.metadata.PackageNotFoundError:
            return "N/A"

    print(f"qam-receiver : {_pkg_display_version('qam-receiver')}")
    print(f"numpy : {_pkg_display_version('numpy')}")
    print(f"scipy : {_pkg_display_version('scipy')}")


cmd_qamrx.add_command(cmd_sweep)
cmd_qamrx.add_command(cmd_bounds)
cmd_qamrx.add_command(cmd_simulate)
cmd_qamrx.add_command(cmd_optimize)
cmd_qamrx.add_command(cmd_validate)


if __name__ == "__main__":
    cmd_qamrx()  # pylint: disable=E1120
