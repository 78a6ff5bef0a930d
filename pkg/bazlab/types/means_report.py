from __future__ import annotations

import math
from typing import Dict, List, Optional
from typing_extensions import Literal

from .._models import BaseModel

__all__ = ["MeansReport", "MeansEntry", "GrowthFit", "WitnessReport", "WitnessEntry"]


class GrowthFit(BaseModel):
    model: Literal["bounded", "log-divergent", "power-divergent"]

    parameters: Dict[str, float]

    residual: float
    """Relative RMS residual of the chosen model."""


class MeansEntry(BaseModel):
    r: float

    value: float
    """M_p(r, f)."""

    truncation_error: float
    """Estimated sup of |f - f_N| on the circle."""


class MeansReport(BaseModel):
    p: float
    """Exponent; infinity selects the maximum modulus."""

    entries: List[MeansEntry]

    fit: Optional[GrowthFit] = None
    """None when fewer than three honest radii remain."""

    monotone: bool = True
    """Whether the values are nondecreasing in r within slack."""

    dropped_radii: List[float] = []
    """Requested radii beyond the truncation-honest limit."""

    @property
    def radii(self) -> List[float]:
        return [e.r for e in self.entries]

    @property
    def values(self) -> List[float]:
        return [e.value for e in self.entries]

    def csv_rows(self) -> List[List[object]]:
        model = self.fit.model if self.fit is not None else ""
        residual = self.fit.residual if self.fit is not None else math.nan
        rows: List[List[object]] = [["r", "M_p", "model", "residual", "truncation_error"]]
        rows.extend([e.r, e.value, model, residual, e.truncation_error] for e in self.entries)
        return rows


class WitnessEntry(BaseModel):
    r: float

    lhs: float
    """Integral of |k_theta|^(1/2) over the circle of radius r."""

    rhs: float
    """sqrt(2) r^(1/2) log(1/(1-r))."""

    ratio: float

    series_lhs: Optional[float] = None
    """Same integral from the order-N series, where its tail is honest."""

    truncation_error: float


class WitnessReport(BaseModel):
    theta: float

    order: int

    entries: List[WitnessEntry]

    fit: Optional[GrowthFit] = None

    divergent: Optional[bool] = None
    """True when the log model wins; None when there are too few radii to say."""

    def csv_rows(self) -> List[List[object]]:
        rows: List[List[object]] = [["r", "lhs", "rhs", "ratio", "series_lhs", "truncation_error"]]
        rows.extend(
            [e.r, e.lhs, e.rhs, e.ratio, "" if e.series_lhs is None else e.series_lhs, e.truncation_error]
            for e in self.entries
        )
        return rows
