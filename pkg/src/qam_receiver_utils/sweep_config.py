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

import pathlib
from typing import Any, Callable, Dict, Optional

from qam_receiver import ReceiverException
from qam_receiver.util import receiver_logger

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
    Spacing,
)
from qam_receiver_utils.sweep import SweepSpec


class SweepConfigException(ReceiverException):
    """
    Exception indicating a problem with a sweep configuration file.
    """

    def __init__(self, file_path=None, **kwargs):
        super().__init__(**kwargs)
        self._file_path = file_path

    def set_file_path(self, file_path):
        self._file_path = file_path

    def __str__(self):
        if self._file_path:
            return "{} (File: {})".format(super().__str__(), self._file_path)
        return super().__str__()


def _spacing(value: str) -> Spacing:
    return Spacing(value.strip().lower())


def _normalize_key(key: str) -> str:
    return key.strip().lower().replace("-", "_")


class SweepConfigFile:
    """
    A plain `key=value` file holding sweep parameters.  Keys are the command
    line flag names without the leading dashes; `nbar-min` and `nbar_min`
    are the same key.  Lines starting with `#` and blank lines are ignored.

    Like other file backed configuration, data is loaded lazily on first
    access and is validated before it is accepted.  A config constructed
    without a path behaves as an in memory object.
    """

    KEYS: Dict[str, Callable[[str], Any]] = {
        "nbar": float,
        "nbar_min": float,
        "nbar_max": float,
        "points": int,
        "spacing": _spacing,
        "trials": int,
        "seed": int,
        "beta_tol": float,
        "helstrom_tol": float,
        "workers": int,
        "out": pathlib.Path,
    }

    def __init__(self, data: Optional[Dict[str, Any]] = None, file_path: Optional[pathlib.Path] = None):
        self._file_path = pathlib.Path(file_path) if file_path else None
        self._data: Optional[Dict[str, Any]] = None
        if data is not None:
            self.set_data(data)

    def path(self) -> Optional[pathlib.Path]:
        return self._file_path

    def data(self) -> Optional[Dict[str, Any]]:
        return self._data

    def is_loaded(self) -> bool:
        return self._data is not None

    def set_data(self, data: Dict[str, Any]):
        """
        Validate and set the in memory data.  String values are converted
        to the type of their key.  Invalid data leaves the object unchanged.
        """
        self.check_data(data)
        self._data = {_normalize_key(key): self._coerce(_normalize_key(key), value) for key, value in data.items()}

    def check_data(self, data: Dict[str, Any]):
        if data is None:
            raise SweepConfigException(message="None is not valid sweep configuration data", file_path=self._file_path)
        for key, value in data.items():
            self._coerce(_normalize_key(key), value)

    def _coerce(self, key: str, value: Any) -> Any:
        if key not in self.KEYS:
            raise SweepConfigException(
                message="Unknown configuration key '{}'. Known keys: {}".format(key, ", ".join(sorted(self.KEYS))),
                file_path=self._file_path,
            )
        if not isinstance(value, str):
            return value
        try:
            return self.KEYS[key](value)
        except ValueError as ve:
            raise SweepConfigException(
                message="Invalid value '{}' for configuration key '{}'".format(value, key),
                inner_exception=ve,
                file_path=self._file_path,
            ) from ve

    @staticmethod
    def parse_text(text: str) -> Dict[str, str]:
        """
        Split `key=value` lines into a dictionary of raw string values.
        """
        parsed: Dict[str, str] = {}
        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.strip()
            if not line or line.startswith("#"):
                continue
            key, separator, value = line.partition("=")
            key = _normalize_key(key)
            if not separator or not key:
                raise SweepConfigException(message="Line {}: expected key=value, got '{}'".format(line_number, line))
            if key in parsed:
                raise SweepConfigException(message="Line {}: duplicate key '{}'".format(line_number, key))
            parsed[key] = value.strip()
        return parsed

    def load(self):
        """
        Force a load from the file.  A no-op for in memory objects.
        """
        if not self._file_path:
            return
        try:
            text = self._file_path.read_text(encoding="utf-8")
            self.set_data(self.parse_text(text))
        except OSError as oe:
            raise SweepConfigException(
                message="Cannot read configuration file: {}".format(oe), inner_exception=oe, file_path=self._file_path
            ) from oe
        except SweepConfigException as sce:
            sce.set_file_path(self._file_path)
            raise sce
        receiver_logger.debug(msg="Loaded sweep configuration", context={"file": str(self._file_path)})

    def lazy_load(self):
        if not self.is_loaded():
            self.load()

    def lazy_get(self, field: str) -> Any:
        self.lazy_load()
        if self._data:
            return self._data.get(_normalize_key(field), None)
        return None

    def effective_conf_value(self, config_key: str, override_value: Any = None, fallback_value: Any = None) -> Any:
        """
        Return the effective configuration value with the following priority:
            - Explicit values from the user.
            - Values from the configuration file.
            - Built-in defaults.
        Zero and empty values given explicitly are honored.
        """
        if override_value is not None:
            return override_value
        config_file_value = self.lazy_get(config_key)
        if config_file_value is not None:
            return config_file_value
        return fallback_value


def resolve_sweep_spec(
    config: SweepConfigFile,
    nbar_min: Optional[float] = None,
    nbar_max: Optional[float] = None,
    points: Optional[int] = None,
    spacing: Optional[str] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    beta_tol: Optional[float] = None,
    helstrom_tol: Optional[float] = None,
    workers: Optional[int] = None,
    out: Optional[pathlib.Path] = None,
    default_trials: int = DEFAULT_TRIALS,
) -> SweepSpec:
    """
    Build a validated sweep spec from command line values, the configuration
    file, and the built-in defaults.
    """
    out_value = config.effective_conf_value("out", out, None)
    return SweepSpec(
        nbar_min=float(config.effective_conf_value("nbar_min", nbar_min, DEFAULT_NBAR_MIN)),
        nbar_max=float(config.effective_conf_value("nbar_max", nbar_max, DEFAULT_NBAR_MAX)),
        points=int(config.effective_conf_value("points", points, DEFAULT_POINTS)),
        spacing=_spacing(str(config.effective_conf_value("spacing", spacing, DEFAULT_SPACING))),
        trials=int(config.effective_conf_value("trials", trials, default_trials)),
        seed=int(config.effective_conf_value("seed", seed, DEFAULT_SEED)),
        beta_tol=float(config.effective_conf_value("beta_tol", beta_tol, DEFAULT_BETA_TOL)),
        helstrom_tol=float(config.effective_conf_value("helstrom_tol", helstrom_tol, DEFAULT_HELSTROM_TOL)),
        workers=int(config.effective_conf_value("workers", workers, DEFAULT_WORKERS)),
        output=pathlib.Path(out_value) if out_value is not None else None,
    )
