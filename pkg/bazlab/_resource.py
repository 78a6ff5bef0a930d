from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ._client import Workbench, AsyncWorkbench


class SyncResource:
    _client: Workbench

    def __init__(self, client: Workbench) -> None:
        self._client = client

    @property
    def _order(self) -> int:
        return self._client.order

    @property
    def _quad_points(self) -> int:
        return self._client.quad_points

    @property
    def _threads(self) -> int:
        return self._client.threads


class AsyncResource:
    _client: AsyncWorkbench

    def __init__(self, client: AsyncWorkbench) -> None:
        self._client = client

    @property
    def _order(self) -> int:
        return self._client.order

    @property
    def _quad_points(self) -> int:
        return self._client.quad_points

    @property
    def _threads(self) -> int:
        return self._client.threads
