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

import csv
import io
import pathlib

import pytest
from click.testing import CliRunner

from qam_receiver_utils.commands.cli.main import cmd_qamrx
from qam_receiver_utils.constants import ExitCode
from qam_receiver_utils.sweep import BOUNDS_HEADER, MC_HEADER, OPTIMIZE_HEADER, SIMULATE_HEADER, SWEEP_HEADER
from tests.test_qam_receiver_utils.util import tdata_resource_file_path

SMALL_SWEEP = ["--nbar-min", "0", "--nbar-max", "1", "--points", "3", "--spacing", "linear"]


def config_arg(name: str) -> str:
    return str(tdata_resource_file_path("configs/" + name))


def parse_csv(text: str):
    rows = list(csv.reader(io.StringIO(text)))
    return tuple(rows[0]), rows[1:]


@pytest.fixture(name="click_cli_runner")
def fixture_click_cli_runner():
    return CliRunner()


class CliTestBase:
    @pytest.fixture(autouse=True)
    def _setup_caplog_fixture(self, caplog):
        # Click and Pytest seem to have some bad interactions with logs and
        # unit testing that lead to "ValueError: I/O operation on closed file"
        # when commands invoke logging.  Effectively disable logging by
        # setting the level insanely high.
        self._caplog = caplog  # pylint: disable=W0201
        self._caplog.set_level(100000)


class TestQamrxCli(CliTestBase):
    def test_main_no_option_shows_help(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx)
        assert ExitCode.OK == result.exit_code
        assert "Hybrid 16-QAM receiver numerical lab" in result.stdout

    def test_smoke_version(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["version"])
        assert ExitCode.OK == result.exit_code
        assert "qam-receiver" in result.stdout

    def test_unknown_command_is_usage_error(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["no-such-command"])
        assert ExitCode.USAGE == result.exit_code


class TestOptimizeCommand(CliTestBase):
    def test_vacuum(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["optimize", "--nbar", "0"])
        assert ExitCode.OK == result.exit_code
        header, rows = parse_csv(result.stdout)
        assert OPTIMIZE_HEADER == header
        assert 1 == len(rows)
        values = dict(zip(header, (float(v) for v in rows[0])))
        assert 0.0 == values["beta_star"]
        assert 0.9375 == values["error_at_zero"]
        assert 0.9375 == values["error_at_beta"]

    def test_displacement_helps(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["optimize", "--nbar", "2"])
        assert ExitCode.OK == result.exit_code
        header, rows = parse_csv(result.stdout)
        values = dict(zip(header, (float(v) for v in rows[0])))
        assert values["error_at_beta"] <= values["error_at_zero"]
        assert values["beta_star"] * values["beta_star"] == values["beta_star_sq"]

    def test_deterministic(self, click_cli_runner):
        first = click_cli_runner.invoke(cmd_qamrx, ["optimize", "--nbar", "3.5"])
        second = click_cli_runner.invoke(cmd_qamrx, ["optimize", "--nbar", "3.5"])
        assert first.stdout == second.stdout

    def test_values_from_config_file(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["optimize", "--config", config_arg("optimize.conf")])
        assert ExitCode.OK == result.exit_code
        _, rows = parse_csv(result.stdout)
        assert 0.0 == float(rows[0][0])

    @pytest.mark.parametrize(
        "args",
        [
            ["optimize"],
            ["optimize", "--nbar", "-1"],
            ["optimize", "--nbar", "abc"],
            ["optimize", "--nbar", "1", "--beta-tol", "0"],
            ["optimize", "--nbar", "1", "--config", "/nonexistent/qamrx.conf"],
        ],
    )
    def test_usage_errors(self, click_cli_runner, args):
        result = click_cli_runner.invoke(cmd_qamrx, args)
        assert ExitCode.USAGE == result.exit_code


class TestSweepCommand(CliTestBase):
    def test_small_sweep(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["sweep"] + SMALL_SWEEP)
        assert ExitCode.OK == result.exit_code
        header, rows = parse_csv(result.stdout)
        assert SWEEP_HEADER == header
        assert ["0", "0.5", "1"] == [row[0] for row in rows]
        vacuum = dict(zip(header, (float(v) for v in rows[0])))
        assert 0.9375 == vacuum["type1_error"]
        assert 0.9375 == vacuum["sql_error"]

    def test_sweep_with_monte_carlo_is_reproducible(self, click_cli_runner):
        args = ["sweep"] + SMALL_SWEEP + ["--trials", "2000", "--seed", "11"]
        first = click_cli_runner.invoke(cmd_qamrx, args)
        second = click_cli_runner.invoke(cmd_qamrx, args + ["--workers", "2"])
        assert ExitCode.OK == first.exit_code
        assert ExitCode.OK == second.exit_code
        assert first.stdout == second.stdout
        header, _ = parse_csv(first.stdout)
        assert SWEEP_HEADER + MC_HEADER == header

    def test_out_file(self, click_cli_runner, tmp_path: pathlib.Path):
        target = tmp_path / "sweep.csv"
        result = click_cli_runner.invoke(cmd_qamrx, ["sweep"] + SMALL_SWEEP + ["--out", str(target)])
        assert ExitCode.OK == result.exit_code
        assert "" == result.stdout
        header, rows = parse_csv(target.read_text(encoding="utf-8"))
        assert SWEEP_HEADER == header
        assert 3 == len(rows)

    def test_unwritable_out_file(self, click_cli_runner, tmp_path: pathlib.Path):
        target = tmp_path / "missing_dir" / "sweep.csv"
        result = click_cli_runner.invoke(cmd_qamrx, ["sweep"] + SMALL_SWEEP + ["--out", str(target)])
        assert ExitCode.RUNTIME == result.exit_code
        assert not target.exists()

    def test_config_file_with_override(self, click_cli_runner):
        result = click_cli_runner.invoke(
            cmd_qamrx, ["sweep", "--config", config_arg("small_linear.conf"), "--points", "2"]
        )
        assert ExitCode.OK == result.exit_code
        _, rows = parse_csv(result.stdout)
        assert ["0", "1"] == [row[0] for row in rows]

    @pytest.mark.parametrize(
        "args",
        [
            ["sweep", "--spacing", "log", "--nbar-min", "0"],
            ["sweep", "--points", "1"],
            ["sweep", "--nbar-min", "2", "--nbar-max", "1"],
            ["sweep", "--spacing", "cubic"],
            ["sweep", "--workers", "0"],
            ["sweep", "--config", config_arg("unknown_key.conf")],
            ["sweep", "--config", config_arg("bad_value.conf")],
        ],
    )
    def test_usage_errors(self, click_cli_runner, args):
        result = click_cli_runner.invoke(cmd_qamrx, args)
        assert ExitCode.USAGE == result.exit_code


class TestBoundsAndSimulateCommands(CliTestBase):
    def test_bounds(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["bounds"] + SMALL_SWEEP)
        assert ExitCode.OK == result.exit_code
        header, rows = parse_csv(result.stdout)
        assert BOUNDS_HEADER == header
        assert 3 == len(rows)
        for row in rows:
            sql, helstrom = float(row[1]), float(row[2])
            assert helstrom <= sql + 1e-6

    def test_simulate(self, click_cli_runner):
        args = ["simulate", "--nbar-min", "1", "--nbar-max", "2", "--points", "2", "--trials", "2000"]
        result = click_cli_runner.invoke(cmd_qamrx, args)
        assert ExitCode.OK == result.exit_code
        header, rows = parse_csv(result.stdout)
        assert SIMULATE_HEADER == header
        assert 2 == len(rows)
        for row in rows:
            values = dict(zip(header, (float(v) for v in row)))
            assert values["mc_type1_ci_low"] <= values["mc_type1_phat"] <= values["mc_type1_ci_high"]

    def test_simulate_requires_trials(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["simulate", "--trials", "0"])
        assert ExitCode.USAGE == result.exit_code


class TestValidateCommand(CliTestBase):
    def test_validate_passes(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["validate"])
        assert ExitCode.OK == result.exit_code
        assert "FAIL" not in result.stdout
        assert "PASS" in result.stdout

    def test_zero_tolerance_fails(self, click_cli_runner):
        result = click_cli_runner.invoke(cmd_qamrx, ["validate", "--tolerance-scale", "0"])
        assert ExitCode.VALIDATION == result.exit_code
        assert "FAIL" in result.stdout
