# SPDX-License-Identifier: MIT
"""Data-parallel evaluation over independent inputs on anyio worker threads."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from typing import Any, TypeVar

import anyio
import anyio.to_thread

from .exceptions import InvalidInputError

logger = logging.getLogger("icmbound")

T = TypeVar("T")
R = TypeVar("R")

CHUNKS_PER_THREAD = 4


def _apply(fn: Callable[[T], R], chunk: Sequence[T]) -> list[R]:
    return [fn(item) for item in chunk]


def chunk_bounds(n: int, threads: int) -> list[tuple[int, int]]:
    """Contiguous ``[lo, hi)`` slices covering ``range(n)``."""
    if n == 0:
        return []
    size = max(1, -(-n // (threads * CHUNKS_PER_THREAD)))
    return [(lo, min(lo + size, n)) for lo in range(0, n, size)]


async def map_ordered(fn: Callable[[T], R], items: Sequence[T], *, threads: int) -> list[R]:
    """``[fn(x) for x in items]`` computed on up to ``threads`` worker threads.

    Results land by index, so the output order never depends on scheduling.
    A failing item cancels the rest and surfaces through the task group.
    """
    if threads < 1:
        raise InvalidInputError(f"threads must be >= 1, got {threads}")
    results: list[Any] = [None] * len(items)
    limiter = anyio.CapacityLimiter(threads)

    async def worker(lo: int, hi: int) -> None:
        results[lo:hi] = await anyio.to_thread.run_sync(_apply, fn, items[lo:hi], limiter=limiter)

    bounds = chunk_bounds(len(items), threads)
    logger.debug("evaluating %d items in %d chunks on %d threads", len(items), len(bounds), threads)
    async with anyio.create_task_group() as tg:
        for lo, hi in bounds:
            tg.start_soon(worker, lo, hi)
    return results
