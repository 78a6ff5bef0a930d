from __future__ import annotations

import os
from typing import Optional

from .._exceptions import ConfigError


def coerce_integer(val: str) -> int:
    return int(val, base=10)


def int_from_env(name: str, default: int) -> int:
    """Read an integer setting from the environment, falling back to `default` when unset."""
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return coerce_integer(raw)
    except ValueError as exc:
        raise ConfigError(f"The {name} environment variable must be an integer, got {raw!r}") from exc


def resolve_threads(threads: Optional[int] = None) -> int:
    """Number of worker threads to use; 0 means one per CPU."""
    if threads is None:
        threads = int_from_env("BAZLAB_THREADS", 0)
    if threads < 0:
        raise ConfigError(f"threads must be >= 0, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads
