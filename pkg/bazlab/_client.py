from __future__ import annotations

from typing import Optional

from .resources import (
    HardyResource,
    CoeffsResource,
    BazilevicResource,
    AsyncHardyResource,
    AsyncCoeffsResource,
    AsyncBazilevicResource,
)
from ._utils import int_from_env, resolve_threads
from ._constants import MIN_ORDER, DEFAULT_ORDER, MIN_CIRCLE_POINTS, DEFAULT_QUAD_POINTS
from ._exceptions import ConfigError

__all__ = ["Workbench", "AsyncWorkbench"]


def _option(value: Optional[int], name: str, env: str, default: int, minimum: int) -> int:
    if value is None:
        value = int_from_env(env, default)
    if value < minimum:
        raise ConfigError(
            f"The {name} option must be at least {minimum}, either passed as {name}= to the workbench "
            f"or set by the {env} environment variable; got {value}"
        )
    return value


class _Options:
    order: int
    quad_points: int
    threads: int

    def _configure(self, order: Optional[int], quad_points: Optional[int], threads: Optional[int]) -> None:
        self.order = _option(order, "order", "BAZLAB_ORDER", DEFAULT_ORDER, MIN_ORDER)
        self.quad_points = _option(quad_points, "quad_points", "BAZLAB_QUAD_POINTS", DEFAULT_QUAD_POINTS, MIN_CIRCLE_POINTS)
        self.threads = resolve_threads(threads)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order}, quad_points={self.quad_points}, threads={self.threads})"


class Workbench(_Options):
    bazilevic: BazilevicResource
    coeffs: CoeffsResource
    hardy: HardyResource

    def __init__(
        self,
        *,
        order: Optional[int] = None,
        quad_points: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> None:
        """Construct a new synchronous workbench.

        This automatically infers the following arguments from their corresponding environment variables if they are not provided:
        - `order` from `BAZLAB_ORDER`
        - `quad_points` from `BAZLAB_QUAD_POINTS`
        - `threads` from `BAZLAB_THREADS` (0 means one per CPU)
        """
        self._configure(order, quad_points, threads)

        self.bazilevic = BazilevicResource(self)
        self.coeffs = CoeffsResource(self)
        self.hardy = HardyResource(self)


class AsyncWorkbench(_Options):
    bazilevic: AsyncBazilevicResource
    coeffs: AsyncCoeffsResource
    hardy: AsyncHardyResource

    def __init__(
        self,
        *,
        order: Optional[int] = None,
        quad_points: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> None:
        """Construct a new async workbench; every call runs the computation in a worker thread.

        This automatically infers the following arguments from their corresponding environment variables if they are not provided:
        - `order` from `BAZLAB_ORDER`
        - `quad_points` from `BAZLAB_QUAD_POINTS`
        - `threads` from `BAZLAB_THREADS` (0 means one per CPU)
        """
        self._configure(order, quad_points, threads)

        self.bazilevic = AsyncBazilevicResource(self)
        self.coeffs = AsyncCoeffsResource(self)
        self.hardy = AsyncHardyResource(self)
