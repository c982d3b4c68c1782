# SPDX-License-Identifier: MIT
"""Shared runtime for CLI commands.

`run_async` bridges click's sync command model to the anyio grid layer: one
`anyio.run` per invocation and a uniform exception -> envelope + exit-code
mapping, so every command fails the same way.
"""

from __future__ import annotations

import functools
import sys
from collections.abc import Callable, Coroutine
from typing import ParamSpec

import anyio

if sys.version_info < (3, 11):  # pragma: no cover - 3.11+ has it as a builtin
    # anyio already requires this backport below 3.11, so it is always present.
    from exceptiongroup import BaseExceptionGroup

from ._output import (
    EXIT_CHECK_FAILED,
    EXIT_CONFIG,
    EXIT_INTERRUPTED,
    EXIT_RUNTIME,
    EXIT_USAGE,
    emit,
    error_envelope,
    note,
)

P = ParamSpec("P")


class CLIError(Exception):
    """A structured command failure: rendered as an error envelope + exit code."""

    def __init__(
        self,
        error_type: str,
        message: str,
        *,
        exit_code: int = EXIT_RUNTIME,
        extra: dict[str, object] | None = None,
    ) -> None:
        super().__init__(message)
        self.error_type = error_type
        self.exit_code = exit_code
        self.extra = extra


def unwrap_exception(exc: Exception) -> Exception:
    """Peel single-error ExceptionGroups so the real failure can be classified.

    A grid worker that raises surfaces through `anyio.create_task_group()` as
    an ExceptionGroup; groups with several distinct failures stay intact.
    """
    seen = 0
    while isinstance(exc, BaseExceptionGroup) and len(exc.exceptions) == 1 and seen < 10:
        inner = exc.exceptions[0]
        if not isinstance(inner, Exception):
            break
        exc = inner
        seen += 1
    return exc


def _classify(exc: Exception) -> CLIError:
    """Map uncaught library exceptions onto the error contract."""
    from ..exceptions import (
        BoundViolationError,
        ClassificationError,
        ConfigurationError,
        InvalidInputError,
        LocalDataError,
    )

    exc = unwrap_exception(exc)

    if isinstance(exc, CLIError):
        return exc
    if isinstance(exc, ConfigurationError):
        return CLIError("config", str(exc), exit_code=EXIT_CONFIG)
    if isinstance(exc, InvalidInputError):
        return CLIError("usage", str(exc), exit_code=EXIT_USAGE)
    if isinstance(exc, BoundViolationError):
        return CLIError("check_failed", str(exc), exit_code=EXIT_CHECK_FAILED, extra={"record": exc.record})
    if isinstance(exc, ClassificationError):
        # Carries everything needed to reproduce the failed case split.
        extra: dict[str, object] = {"m": exc.m, "p": exc.p, "details": {k: str(v) for k, v in exc.details.items()}}
        return CLIError("classification", str(exc), extra=extra)
    if isinstance(exc, LocalDataError):
        return CLIError("local_data", str(exc))
    if isinstance(exc, OSError):
        return CLIError("io", str(exc))
    if isinstance(exc, ValueError):
        return CLIError("usage", str(exc), exit_code=EXIT_USAGE)
    if isinstance(exc, BaseExceptionGroup):
        causes = "; ".join(f"{type(e).__name__}: {e}" for e in exc.exceptions[:5])
        extra_count = len(exc.exceptions) - 5
        if extra_count > 0:
            causes += f"; (+{extra_count} more)"
        return CLIError("internal", f"{len(exc.exceptions)} parallel tasks failed - {causes}")
    return CLIError("internal", f"{type(exc).__name__}: {exc}")


def run_async(command: str) -> Callable[[Callable[P, Coroutine[None, None, int]]], Callable[P, None]]:
    """Wrap an async command body returning an exit code into a sync click callback.

    The body renders its own output on success and returns the exit code.
    Failures raise CLIError (or any library exception, mapped by `_classify`);
    the wrapper renders the error envelope on stdout when ``--json`` was
    given, and always a one-line summary on stderr.
    """

    def decorator(fn: Callable[P, Coroutine[None, None, int]]) -> Callable[P, None]:
        @functools.wraps(fn)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> None:
            json_output = bool(kwargs.get("json_output", False))

            async def _main() -> int:
                try:
                    return await fn(*args, **kwargs)
                except Exception as exc:  # noqa: BLE001 - single rendering point for the error contract
                    error = _classify(exc)
                    if json_output:
                        emit(error_envelope(command, error.error_type, str(error), extra=error.extra))
                    note(f"error ({error.error_type}): {error}")
                    return error.exit_code

            try:
                code = anyio.run(_main)
            except KeyboardInterrupt:
                note("interrupted")
                raise SystemExit(EXIT_INTERRUPTED) from None
            if code != 0:
                raise SystemExit(code)

        return wrapper

    return decorator


def resolve_threads(threads: int | None) -> int:
    """``--threads`` if given, else ``ICMBOUND_THREADS``."""
    if threads is None:
        from ..config import get_settings

        return get_settings().threads
    if threads < 1:
        raise CLIError("usage", f"--threads must be >= 1, got {threads}", exit_code=EXIT_USAGE)
    return threads


def parse_range(value: str | None, flag: str) -> tuple[int, int] | None:
    """Parse an inclusive ``A:B`` range flag (``-200:200``)."""
    if value is None:
        return None
    lo, sep, hi = value.partition(":")
    try:
        if not sep:
            raise ValueError
        bounds = (int(lo), int(hi))
    except ValueError:
        raise CLIError("usage", f"{flag}: invalid range {value!r} (use e.g. -200:200)", exit_code=EXIT_USAGE) from None
    if bounds[0] > bounds[1]:
        raise CLIError("usage", f"{flag}: empty range {value!r}", exit_code=EXIT_USAGE)
    return bounds
