from ._sync import (
    asyncify as asyncify,
    to_thread as to_thread,
    parallel_map as parallel_map,
    in_async_context as in_async_context,
)
from ._utils import (
    int_from_env as int_from_env,
    coerce_integer as coerce_integer,
    resolve_threads as resolve_threads,
)
