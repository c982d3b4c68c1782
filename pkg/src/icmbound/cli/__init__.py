# SPDX-License-Identifier: MIT
"""icmbound command line.

Contract (details in docs/cli.md):
- stdout: a text report, or with --json exactly one JSON envelope
- stderr: log lines and human-readable diagnostics
- exit codes: 0 ok · 1 runtime · 2 usage · 3 config · 5 check failed · 130 interrupted
"""

from __future__ import annotations

import logging

import click

WORKFLOW_HELP = """\
icmbound: certified bounds on the ideal class monoid of quadratic and
Cappell-Shaneson cubic orders.

\b
Typical use:
  icmbound cs --m 11                 one cubic order, full report
  icmbound quad --d -1 --f 9         one quadratic order (exact ICM for d < 0)
  icmbound sweep --from -100 --to 100 --out cs.csv --threads 4
  icmbound verify all                every property suite
  icmbound local-bound --h 1 --places places.json

\b
Output contract: stdout = report (or one JSON envelope with --json);
logs on stderr. Exit codes: 0 ok, 1 runtime, 2 usage, 3 config,
5 verification counterexample, 130 SIGINT.
"""


@click.group(
    context_settings={"help_option_names": ["-h", "--help"]},
    help=WORKFLOW_HELP,
)
@click.version_option(package_name="icmbound", prog_name="icmbound")
@click.option("-q", "--quiet", is_flag=True, help="Suppress stderr log lines (errors still print).")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging to stderr.")
def cli(quiet: bool, verbose: bool) -> None:
    if verbose:
        logging.getLogger("icmbound").setLevel(logging.DEBUG)
    elif quiet:
        logging.getLogger("icmbound").setLevel(logging.ERROR)


def _register_commands() -> None:
    from .cs import cs_command
    from .misc import capabilities, classnum_bound_command, local_bound_command, oracle_hform_command
    from .quad import quad_command
    from .sweep import sweep_command
    from .verify import verify_command

    cli.add_command(cs_command)
    cli.add_command(quad_command)
    cli.add_command(sweep_command)
    cli.add_command(verify_command)
    cli.add_command(classnum_bound_command)
    cli.add_command(oracle_hform_command)
    cli.add_command(local_bound_command)
    cli.add_command(capabilities)


_register_commands()


def main() -> None:
    # Optional .env for local development.
    try:
        from dotenv import load_dotenv

        load_dotenv()
    except ImportError:
        pass
    cli(prog_name="icmbound")
