from __future__ import annotations

from typing import Optional

from ..lib import coeffs as _coeffs
from .._utils import asyncify
from .._resource import SyncResource, AsyncResource
from .._constants import SWEEP_MAX_DEGREE
from ..lib.powser import Series
from ..types.psi_series import PsiSeries
from ..types.bound_report import BoundReport, DominationReport
from ..types.sweep_report import SweepReport
from ..types.bazilevic_spec import BazFunction

__all__ = ["CoeffsResource", "AsyncCoeffsResource"]


class CoeffsResource(SyncResource):
    def psi(self, f: BazFunction) -> PsiSeries:
        return _coeffs.psi_from_f(f)

    def bounds(self, psi: PsiSeries) -> BoundReport:
        return _coeffs.bound_check(psi)

    def recurrence(self, psi: PsiSeries, p: Series) -> float:
        return _coeffs.recurrence_check(psi, p)

    def domination(self, psi: PsiSeries) -> DominationReport:
        return _coeffs.domination_check(psi)

    def extremal(self, alpha: float, *, N: Optional[int] = None) -> PsiSeries:
        return _coeffs.extremal_G(alpha, self._order if N is None else N)

    def reference(self, alpha: float, *, N: Optional[int] = None) -> Series:
        return _coeffs.conjecture1_reference(alpha, self._order if N is None else N)

    def sweep(
        self,
        which: _coeffs.Conjecture,
        alpha: float,
        *,
        trials: int,
        seed: int,
        N: Optional[int] = None,
        n_max: int = SWEEP_MAX_DEGREE,
    ) -> SweepReport:
        return _coeffs.conjecture_sweep(
            which,
            alpha,
            trials,
            seed,
            self._order if N is None else N,
            n_max=n_max,
            threads=self._threads,
        )


class AsyncCoeffsResource(AsyncResource):
    async def psi(self, f: BazFunction) -> PsiSeries:
        return await asyncify(_coeffs.psi_from_f)(f)

    async def bounds(self, psi: PsiSeries) -> BoundReport:
        return await asyncify(_coeffs.bound_check)(psi)

    async def recurrence(self, psi: PsiSeries, p: Series) -> float:
        return await asyncify(_coeffs.recurrence_check)(psi, p)

    async def domination(self, psi: PsiSeries) -> DominationReport:
        return await asyncify(_coeffs.domination_check)(psi)

    async def extremal(self, alpha: float, *, N: Optional[int] = None) -> PsiSeries:
        return await asyncify(_coeffs.extremal_G)(alpha, self._order if N is None else N)

    async def reference(self, alpha: float, *, N: Optional[int] = None) -> Series:
        return await asyncify(_coeffs.conjecture1_reference)(alpha, self._order if N is None else N)

    async def sweep(
        self,
        which: _coeffs.Conjecture,
        alpha: float,
        *,
        trials: int,
        seed: int,
        N: Optional[int] = None,
        n_max: int = SWEEP_MAX_DEGREE,
    ) -> SweepReport:
        return await asyncify(_coeffs.conjecture_sweep)(
            which,
            alpha,
            trials,
            seed,
            self._order if N is None else N,
            n_max=n_max,
            threads=self._threads,
        )
