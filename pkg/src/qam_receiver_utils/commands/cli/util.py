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
import functools
import pathlib
from typing import Any, Iterable, Optional, Sequence

from qam_receiver import InvalidParameterException, InvariantViolationException

from qam_receiver_utils.constants import ExitCode
from qam_receiver_utils.csv_output import render_csv, write_csv_atomic
from qam_receiver_utils.sweep_config import SweepConfigException


class ReceiverUsageException(click.UsageError):
    exit_code = ExitCode.USAGE


class ReceiverRuntimeException(click.ClickException):
    exit_code = ExitCode.RUNTIME


class ValidationFailedException(click.ClickException):
    exit_code = ExitCode.VALIDATION


def recast_exceptions_to_click(*exceptions, **params):  # pylint: disable=W0613
    """
    Decorator to catch exceptions and raise them as ClickExceptions carrying
    the exit code of their category: bad input is a usage error, a broken
    invariant is a validation failure, and everything else (solver
    convergence, I/O) is a runtime failure.  Stack traces are not shown to
    the end-user.
    """
    if not exceptions:
        exceptions = (Exception,)

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except click.ClickException:
                raise
            except exceptions as e:
                if isinstance(e, (InvalidParameterException, SweepConfigException)):
                    raise ReceiverUsageException(str(e)) from e
                if isinstance(e, InvariantViolationException):
                    raise ValidationFailedException(str(e)) from e
                raise ReceiverRuntimeException(str(e)) from e

        return wrapper

    return decorator


def emit_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], out: Optional[pathlib.Path]):
    """
    Write the CSV to `out` atomically, or to standard output when no path is given.
    """
    if out:
        write_csv_atomic(out, header, rows)
    else:
        click.echo(render_csv(header, rows), nl=False)
