from __future__ import annotations

from typing import Any, Dict, Union, Optional, Sequence

from ..lib import bazilevic as _bazilevic
from .._utils import asyncify
from .._resource import SyncResource, AsyncResource
from .._constants import DEFAULT_SCAN_GRID, DEFAULT_SCAN_RADII
from ..lib.powser import Series
from ..types.bazilevic_spec import BazFunction, BazilevicSpec
from ..types.correspondence_report import CorrespondenceReport
from ..types.necessary_scan_report import NecessaryScanReport
from ..types.bazilevic_spec_params import BazilevicSpecParams

__all__ = ["BazilevicResource", "AsyncBazilevicResource"]

SpecInput = Union[BazilevicSpecParams, Dict[str, Any]]


def _params(spec: SpecInput, order: Optional[int], default_order: int) -> BazilevicSpecParams:
    params = spec if isinstance(spec, BazilevicSpecParams) else BazilevicSpecParams.model_validate(spec)
    if order is not None:
        return params.model_copy(update={"order": order})
    if "order" not in params.model_fields_set:
        return params.model_copy(update={"order": default_order})
    return params


class BazilevicResource(SyncResource):
    def resolve(self, spec: SpecInput, *, N: Optional[int] = None) -> BazilevicSpec:
        """Builds the series of a spec document.

        The order is taken from `N`, then from the document's own `N`, then from the workbench.
        """
        return _bazilevic.resolve_spec(_params(spec, N, self._order))

    def construct(self, spec: Union[SpecInput, BazilevicSpec], *, N: Optional[int] = None) -> BazFunction:
        if isinstance(spec, BazilevicSpec):
            return _bazilevic.construct(spec)
        return _bazilevic.construct(self.resolve(spec, N=N))

    def koebe(self, theta: float, alpha: float, *, N: Optional[int] = None) -> BazFunction:
        return _bazilevic.koebe_counterexample(theta, alpha, self._order if N is None else N)

    def p_operator(self, f: BazFunction, alpha: float) -> Series:
        return _bazilevic.p_operator(f, alpha)

    def necessary_condition(self, f: BazFunction, alpha: float, r: float, theta1: float, theta2: float) -> float:
        return _bazilevic.necessary_condition(f, alpha, r, theta1, theta2, self._quad_points)

    def scan(
        self,
        f: BazFunction,
        alpha: float,
        *,
        radii: Sequence[float] = DEFAULT_SCAN_RADII,
        grid: int = DEFAULT_SCAN_GRID,
    ) -> NecessaryScanReport:
        return _bazilevic.necessary_scan(f, alpha, radii, grid, self._quad_points, threads=self._threads)

    def to_CI(self, g: BazFunction, alpha: float) -> Series:
        return _bazilevic.to_CI(g, alpha)

    def from_CI(self, F: Series, beta: float) -> BazFunction:
        return _bazilevic.from_CI(F, beta)

    def correspond(self, g: BazFunction, alpha: float) -> CorrespondenceReport:
        return _bazilevic.correspondence(g, alpha)


class AsyncBazilevicResource(AsyncResource):
    async def resolve(self, spec: SpecInput, *, N: Optional[int] = None) -> BazilevicSpec:
        return await asyncify(_bazilevic.resolve_spec)(_params(spec, N, self._order))

    async def construct(self, spec: Union[SpecInput, BazilevicSpec], *, N: Optional[int] = None) -> BazFunction:
        resolved = spec if isinstance(spec, BazilevicSpec) else await self.resolve(spec, N=N)
        return await asyncify(_bazilevic.construct)(resolved)

    async def koebe(self, theta: float, alpha: float, *, N: Optional[int] = None) -> BazFunction:
        return await asyncify(_bazilevic.koebe_counterexample)(theta, alpha, self._order if N is None else N)

    async def p_operator(self, f: BazFunction, alpha: float) -> Series:
        return await asyncify(_bazilevic.p_operator)(f, alpha)

    async def necessary_condition(
        self, f: BazFunction, alpha: float, r: float, theta1: float, theta2: float
    ) -> float:
        return await asyncify(_bazilevic.necessary_condition)(f, alpha, r, theta1, theta2, self._quad_points)

    async def scan(
        self,
        f: BazFunction,
        alpha: float,
        *,
        radii: Sequence[float] = DEFAULT_SCAN_RADII,
        grid: int = DEFAULT_SCAN_GRID,
    ) -> NecessaryScanReport:
        return await asyncify(_bazilevic.necessary_scan)(
            f, alpha, radii, grid, self._quad_points, threads=self._threads
        )

    async def to_CI(self, g: BazFunction, alpha: float) -> Series:
        return await asyncify(_bazilevic.to_CI)(g, alpha)

    async def from_CI(self, F: Series, beta: float) -> BazFunction:
        return await asyncify(_bazilevic.from_CI)(F, beta)

    async def correspond(self, g: BazFunction, alpha: float) -> CorrespondenceReport:
        return await asyncify(_bazilevic.correspondence)(g, alpha)
