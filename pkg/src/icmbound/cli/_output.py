# SPDX-License-Identifier: MIT
"""Output contract for the CLI.

stdout carries the command result and nothing else: a human-readable report
by default, or with ``--json`` exactly one envelope. Diagnostics and log lines
go to stderr. A TTY changes JSON formatting only (pretty vs compact).

Envelope shape::

    {"v": 1, "ok": true,  "command": "cs", "result": {...}}
    {"v": 1, "ok": false, "command": "verify", "error": {"type": "check_failed", "message": "..."}, ...}
"""

from __future__ import annotations

import json
import pathlib
import sys
from fractions import Fraction

import click

ENVELOPE_VERSION = 1

# Exit codes (documented in docs/cli.md).
EXIT_OK = 0
EXIT_RUNTIME = 1  # internal failure, write failure, violated bound assertion
EXIT_USAGE = 2  # bad flags/arguments (click's own usage errors also exit 2)
EXIT_CONFIG = 3  # invalid ICMBOUND_* settings
EXIT_CHECK_FAILED = 5  # a verification suite found a counterexample
EXIT_INTERRUPTED = 130


def _json_default(obj: object) -> object:
    import pydantic

    if isinstance(obj, pydantic.BaseModel):
        return obj.model_dump(mode="json")
    if isinstance(obj, pathlib.Path):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    # No silent str() fallback; contract tests catch new unrenderable types.
    raise TypeError(f"Unrenderable type in CLI output: {type(obj)!r}")


def render(envelope: dict[str, object], *, pretty: bool | None = None) -> str:
    """Serialize an envelope; pretty-print only on a TTY (tuples become arrays)."""
    if pretty is None:
        pretty = sys.stdout.isatty()
    return json.dumps(envelope, default=_json_default, indent=2 if pretty else None)


def success_envelope(command: str, result: object) -> dict[str, object]:
    return {"v": ENVELOPE_VERSION, "ok": True, "command": command, "result": result}


def error_envelope(
    command: str,
    error_type: str,
    message: str,
    *,
    extra: dict[str, object] | None = None,
) -> dict[str, object]:
    envelope: dict[str, object] = {
        "v": ENVELOPE_VERSION,
        "ok": False,
        "command": command,
        "error": {"type": error_type, "message": message},
    }
    if extra:
        envelope.update(extra)
    return envelope


def emit(envelope: dict[str, object]) -> None:
    """Write one envelope to stdout."""
    click.echo(render(envelope))


def emit_text(lines: list[str]) -> None:
    """Write a plain-text report to stdout."""
    click.echo("\n".join(lines))


def note(message: str) -> None:
    """Write a human-readable diagnostic line to stderr."""
    click.echo(f"icmbound: {message}", err=True)
