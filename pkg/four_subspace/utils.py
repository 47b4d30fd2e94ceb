from __future__ import annotations

import asyncio
import threading
from collections.abc import Coroutine, Iterator
from typing import Any, TypeVar, cast

T = TypeVar('T')


async def handle_completed_partitions(
    coros: Iterator[asyncio.futures.Future[tuple[int, T]]],
) -> list[T]:
    """Collects ``(index, result)`` pairs in partition order."""
    done: list[tuple[int, T]] = []
    for coro in coros:
        try:
            done.append(await coro)
        except KeyboardInterrupt:
            break
    done.sort(key=lambda item: item[0])
    return [result for _, result in done]


class RunThread(threading.Thread):
    def __init__(self, coro: Coroutine[Any, Any, T]):
        self.coro = coro
        self.result = None
        super().__init__()

    def run(self):
        self.result = asyncio.run(self.coro)


def run_async(coro: Coroutine[Any, Any, T]) -> T:
    """Runs ``coro`` to completion from synchronous code.

    Inside a running event loop (a notebook, an async caller) the
    coroutine gets its own loop on a helper thread.

    Args:
        coro (Coroutine[Any, Any, T]):
            The census coroutine.

    Returns:
        T: The result of the coroutine.
    """
    try:
        loop = asyncio.get_running_loop()
    except RuntimeError:
        loop = None
    if loop and loop.is_running():
        thread = RunThread(coro)
        thread.start()
        thread.join()
        return cast(T, thread.result)
    else:
        return asyncio.run(coro)
