from __future__ import annotations

import asyncio
import functools
from typing import Any, List, TypeVar, Callable, Iterable, Optional, Awaitable
from typing_extensions import ParamSpec

import anyio
import sniffio
import anyio.to_thread

from ._logs import logger
from ._utils import resolve_threads

T_Item = TypeVar("T_Item")
T_Retval = TypeVar("T_Retval")
T_ParamSpec = ParamSpec("T_ParamSpec")


def in_async_context() -> bool:
    try:
        sniffio.current_async_library()
    except sniffio.AsyncLibraryNotFoundError:
        return False
    return True


async def to_thread(
    func: Callable[T_ParamSpec, T_Retval], /, *args: T_ParamSpec.args, **kwargs: T_ParamSpec.kwargs
) -> T_Retval:
    if sniffio.current_async_library() == "asyncio":
        return await asyncio.to_thread(func, *args, **kwargs)

    return await anyio.to_thread.run_sync(
        functools.partial(func, *args, **kwargs),
    )


# inspired by `asyncer`, https://github.com/tiangolo/asyncer
def asyncify(function: Callable[T_ParamSpec, T_Retval]) -> Callable[T_ParamSpec, Awaitable[T_Retval]]:
    """
    Take a blocking function and create an async one that receives the same
    positional and keyword arguments, running the original in a worker thread.

    Usage:

    ```python
    scan = asyncify(necessary_scan)
    report = await scan(f, 2.0)
    ```
    """

    async def wrapper(*args: T_ParamSpec.args, **kwargs: T_ParamSpec.kwargs) -> T_Retval:
        return await to_thread(function, *args, **kwargs)

    return wrapper


async def _gather(func: Callable[[T_Item], T_Retval], items: List[T_Item], workers: int) -> List[Any]:
    limiter = anyio.CapacityLimiter(workers)
    results: List[Any] = [None] * len(items)

    async def _run(index: int, item: T_Item) -> None:
        results[index] = await anyio.to_thread.run_sync(func, item, limiter=limiter)

    async with anyio.create_task_group() as tg:
        for index, item in enumerate(items):
            tg.start_soon(_run, index, item)
    return results


def parallel_map(
    func: Callable[[T_Item], T_Retval],
    items: Iterable[T_Item],
    *,
    threads: Optional[int] = None,
) -> List[T_Retval]:
    """Apply `func` to every item using at most `threads` worker threads.

    Results are returned in input order regardless of scheduling. When called
    from inside a running event loop the work is done sequentially instead.
    """
    work = list(items)
    workers = resolve_threads(threads)
    if workers == 1 or len(work) <= 1 or in_async_context():
        return [func(item) for item in work]

    logger.debug("fanning out %d tasks over %d threads", len(work), workers)
    return anyio.run(_gather, func, work, workers)
