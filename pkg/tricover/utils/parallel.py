import asyncio
import logging
import os

from collections.abc import Callable, Sequence
from typing import TypeVar

from tricover.config import DEFAULT_THREADS, THREADS_ENV_VAR


T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if not raw:
        return DEFAULT_THREADS
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {THREADS_ENV_VAR}={raw!r}: not an integer")
        return DEFAULT_THREADS
    if value < 1:
        logger.warning(f"Ignoring {THREADS_ENV_VAR}={raw!r}: must be at least 1")
        return DEFAULT_THREADS
    return value


async def gather_in_threads(func: Callable[[T], R], items: Sequence[T], max_workers: int) -> list[R]:
    semaphore = asyncio.Semaphore(max_workers)

    async def run(item: T) -> R:
        async with semaphore:
            return await asyncio.to_thread(func, item)

    return await asyncio.gather(*(run(item) for item in items))


def parallel_map(func: Callable[[T], R], items: Sequence[T], max_workers: int | None = None) -> list[R]:
    """Apply func to every item, keeping input order whatever the completion order."""
    workers = max_workers if max_workers is not None else worker_count()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return asyncio.run(gather_in_threads(func, items, workers))

    logger.debug("Event loop already running in this thread; mapping sequentially")
    return [func(item) for item in items]
