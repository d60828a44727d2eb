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
CSV emission shared by every `qamrx` command.

Output is locale independent: '.' decimal point, comma separated fields,
'\n' line endings, and floats printed with 17 significant digits so every
value round-trips to the same double.  Files are written to a temporary
sibling first and renamed into place, so a failed run never leaves a
partial CSV behind.
"""

import csv
import io
import os
import pathlib
import tempfile
from numbers import Integral, Real
from typing import Any, Iterable, Sequence

from qam_receiver.logging.events import ReceiverEvent
from qam_receiver.util import receiver_logger

from qam_receiver_utils.constants import CSV_FLOAT_FORMAT, CSV_LINE_TERMINATOR


def format_field(value: Any) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, Integral):
        return str(int(value))
    if isinstance(value, Real):
        return format(float(value), CSV_FLOAT_FORMAT)
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator=CSV_LINE_TERMINATOR)
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise ValueError("Row has {} fields, header has {}".format(len(row), len(header)))
        writer.writerow([format_field(value) for value in row])
    return buffer.getvalue()


def write_csv_atomic(path: pathlib.Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> pathlib.Path:
    """
    Render and write the CSV to `path` through a temporary file in the same
    directory and an atomic rename.
    """
    path = pathlib.Path(path)
    content = render_csv(header, rows)
    fd, tmp_name = tempfile.mkstemp(prefix=".{}.".format(path.name), suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as tmp_file:
            tmp_file.write(content)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise

    receiver_logger.info(
        msg="Wrote {}".format(path),
        event=ReceiverEvent.SWEEP_WRITTEN,
        context={"file": str(path), "rows": content.count(CSV_LINE_TERMINATOR) - 1},
    )
    return path
