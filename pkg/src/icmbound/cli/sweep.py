# SPDX-License-Identifier: MIT
"""`icmbound sweep`: one SweepRow per Cappell-Shaneson order over a range of m."""

from __future__ import annotations

import logging
import pathlib
from typing import TYPE_CHECKING

import anyio.to_thread
import click

from ._output import EXIT_USAGE, emit, emit_text, success_envelope
from ._runtime import CLIError, resolve_threads, run_async

if TYPE_CHECKING:
    from ..types import SweepRow

logger = logging.getLogger("icmbound")


def _row(m: int) -> SweepRow:
    from ..bounds import cs_bound
    from ..types import SweepRow

    return SweepRow.from_report(cs_bound(m))


@click.command("sweep")
@click.option("--from", "m_from", type=int, required=True, help="First m (inclusive).")
@click.option("--to", "m_to", type=int, required=True, help="Last m (inclusive).")
@click.option("--threads", type=int, default=None, help="Worker threads (default ICMBOUND_THREADS).")
@click.option(
    "--out",
    "out",
    type=click.Path(dir_okay=False, path_type=pathlib.Path),
    required=True,
    help="Output file.",
)
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl"]), default="csv", show_default=True)
@click.option("--json", "json_output", is_flag=True, help="Emit the summary as a JSON envelope.")
@run_async("sweep")
async def sweep_command(
    m_from: int,
    m_to: int,
    threads: int | None,
    out: pathlib.Path,
    fmt: str,
    json_output: bool,
) -> int:
    """Write cs reports for every m in [FROM, TO] to a CSV or JSONL file.

    Rows come out in ascending m and byte-identical for any --threads.
    """
    from ..grid import map_ordered
    from ._io import write_rows

    if m_from > m_to:
        raise CLIError("usage", f"--from {m_from} is greater than --to {m_to}", exit_code=EXIT_USAGE)
    workers = resolve_threads(threads)

    rows = await map_ordered(_row, list(range(m_from, m_to + 1)), threads=workers)
    await anyio.to_thread.run_sync(write_rows, out, rows, fmt)
    simple_count = sum(1 for row in rows if row.bound_simple is not None)
    logger.info("sweep [%d, %d]: %d rows written to %s", m_from, m_to, len(rows), out)

    summary = {
        "rows": len(rows),
        "out": out,
        "format": fmt,
        "m_from": m_from,
        "m_to": m_to,
        "delta_E_over_3075": simple_count,
    }
    if json_output:
        emit(success_envelope("sweep", summary))
    else:
        emit_text([f"wrote {len(rows)} rows to {out} ({simple_count} with Delta_E > 3075)"])
    return 0
