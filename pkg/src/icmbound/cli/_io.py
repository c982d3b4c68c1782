# SPDX-License-Identifier: MIT
"""Flat-file writers for sweep output.

CSV follows RFC 4180 (CRLF line ends, minimal quoting, mandatory header in
``SweepRow`` field order); JSON lines are one compact ``SweepRow`` per line.
Both are deterministic, so the same range always produces the same bytes.
"""

from __future__ import annotations

import csv
import pathlib
from collections.abc import Sequence
from typing import Literal

from ..types import SWEEP_COLUMNS, SweepRow
from ._output import EXIT_RUNTIME
from ._runtime import CLIError

OutputFormat = Literal["csv", "jsonl"]


def _csv_cell(value: object) -> object:
    return "" if value is None else value


def write_rows(path: pathlib.Path, rows: Sequence[SweepRow], fmt: OutputFormat) -> None:
    """Write all rows to ``path`` (parent directories are created).

    Raises:
        CLIError: On any I/O failure, naming the path.
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as fh:
            if fmt == "csv":
                writer = csv.writer(fh, lineterminator="\r\n")
                writer.writerow(SWEEP_COLUMNS)
                for row in rows:
                    data = row.model_dump(mode="json")
                    writer.writerow([_csv_cell(data[column]) for column in SWEEP_COLUMNS])
            else:
                for row in rows:
                    fh.write(row.model_dump_json() + "\n")
    except OSError as exc:
        raise CLIError("io", f"cannot write {path}: {exc.strerror or exc}", exit_code=EXIT_RUNTIME) from exc
