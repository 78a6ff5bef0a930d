from __future__ import annotations

from typing import Tuple, Union, Optional, Sequence
from pathlib import Path

from ..lib import hardy as _hardy
from .._utils import asyncify
from .._resource import SyncResource, AsyncResource
from ..lib.powser import Series
from ..types.means_report import MeansReport, WitnessReport

__all__ = ["HardyResource", "AsyncHardyResource"]


class HardyResource(SyncResource):
    def integral_means(self, f: Series, p: float, r: float) -> float:
        return _hardy.integral_means(f, p, r, self._quad_points)

    def profile(self, f: Series, p: float, radii: Sequence[float]) -> MeansReport:
        return _hardy.means_profile(f, p, radii, self._quad_points, threads=self._threads)

    def witness(self, theta: float, radii: Sequence[float], *, N: Optional[int] = None) -> WitnessReport:
        return _hardy.koebe_divergence_witness(
            theta, radii, self._order if N is None else N, self._quad_points, threads=self._threads
        )

    def write_plot_data(self, report: MeansReport, prefix: Union[str, Path]) -> Tuple[Path, Path]:
        return _hardy.write_plot_data(report, prefix)


class AsyncHardyResource(AsyncResource):
    async def integral_means(self, f: Series, p: float, r: float) -> float:
        return await asyncify(_hardy.integral_means)(f, p, r, self._quad_points)

    async def profile(self, f: Series, p: float, radii: Sequence[float]) -> MeansReport:
        return await asyncify(_hardy.means_profile)(f, p, radii, self._quad_points, threads=self._threads)

    async def witness(self, theta: float, radii: Sequence[float], *, N: Optional[int] = None) -> WitnessReport:
        return await asyncify(_hardy.koebe_divergence_witness)(
            theta, radii, self._order if N is None else N, self._quad_points, threads=self._threads
        )

    async def write_plot_data(self, report: MeansReport, prefix: Union[str, Path]) -> Tuple[Path, Path]:
        return await asyncify(_hardy.write_plot_data)(report, prefix)
