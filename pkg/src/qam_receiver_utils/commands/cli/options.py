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
import pathlib
from typing import Any, Callable

from qam_receiver_utils.constants import (
    DEFAULT_BETA_TOL,
    DEFAULT_HELSTROM_TOL,
    DEFAULT_NBAR_MAX,
    DEFAULT_NBAR_MIN,
    DEFAULT_POINTS,
    DEFAULT_SEED,
    DEFAULT_SPACING,
    DEFAULT_WORKERS,
    Spacing,
)

_click_option_decorator_type = Callable[..., Any]

# Flag values default to None so that an omitted flag can fall through to
# the configuration file.  The effective defaults are named in the help text.


def opt_loglevel(default="WARNING", hidden: bool = False) -> _click_option_decorator_type:
    """
    Click option for specifying a log level.
    """

    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "-l",
            "--loglevel",
            help="Set the log level.",
            type=click.Choice(["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"], case_sensitive=False),
            default=default,
            show_default=True,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_config(default=None, hidden: bool = False) -> _click_option_decorator_type:
    """
    Click option for specifying a key=value configuration file.
    """

    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--config",
            "config_file",
            type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
            help="Read parameters from a key=value file.  Command line flags take precedence over the file.",
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_nbar(default=None, hidden: bool = False) -> _click_option_decorator_type:
    """
    Click option for specifying a single mean photon number.
    """

    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--nbar",
            type=float,
            help="Mean photon number of the input symbol.",
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_nbar_min(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--nbar-min",
            type=float,
            help="Smallest mean photon number of the sweep.  [default: {}]".format(DEFAULT_NBAR_MIN),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_nbar_max(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--nbar-max",
            type=float,
            help="Largest mean photon number of the sweep.  [default: {}]".format(DEFAULT_NBAR_MAX),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_points(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--points",
            type=int,
            help="Number of grid points, endpoints included.  [default: {}]".format(DEFAULT_POINTS),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_spacing(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--spacing",
            type=click.Choice([str(spacing) for spacing in Spacing], case_sensitive=False),
            help="Grid spacing.  [default: {}]".format(DEFAULT_SPACING),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_trials(default=None, hidden: bool = False, default_help: int = 0) -> _click_option_decorator_type:
    """
    Click option for specifying the Monte Carlo trial count.
    """

    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--trials",
            type=int,
            help="Monte Carlo trials per receiver type and grid point.  0 skips the simulation.  [default: {}]".format(
                default_help
            ),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_seed(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--seed",
            type=int,
            help="Monte Carlo seed.  Identical seeds give identical output.  [default: {}]".format(DEFAULT_SEED),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_beta_tol(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--beta-tol",
            type=float,
            help="Final bracket width of the displacement search.  [default: {}]".format(DEFAULT_BETA_TOL),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_helstrom_tol(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--helstrom-tol",
            type=float,
            help="Optimality residual accepted by the Helstrom solver.  [default: {}]".format(DEFAULT_HELSTROM_TOL),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_workers(default=None, hidden: bool = False) -> _click_option_decorator_type:
    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--workers",
            type=int,
            help="Worker processes for grid points.  Output does not depend on this.  [default: {}]".format(
                DEFAULT_WORKERS
            ),
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_out(default=None, hidden: bool = False) -> _click_option_decorator_type:
    """
    Click option for specifying the CSV output file.
    """

    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--out",
            type=click.Path(dir_okay=False, path_type=pathlib.Path),
            help="Write the CSV to this file instead of standard output.",
            default=default,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_tolerance_scale(default=1.0, hidden: bool = True) -> _click_option_decorator_type:
    """
    Click option for scaling every validation tolerance.  Used to check
    that the suite can fail.
    """

    def decorator(function) -> _click_option_decorator_type:
        function = click.option(
            "--tolerance-scale",
            type=float,
            help="Multiply every validation tolerance by this factor.",
            default=default,
            show_default=True,
            hidden=hidden,
        )(function)
        return function

    return decorator


def opt_sweep_grid() -> _click_option_decorator_type:
    """
    The photon number grid options shared by every sweep command.
    """

    def decorator(function) -> _click_option_decorator_type:
        for option in (opt_workers(), opt_spacing(), opt_points(), opt_nbar_max(), opt_nbar_min(), opt_config()):
            function = option(function)
        return function

    return decorator
