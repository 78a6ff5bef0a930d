from __future__ import annotations

import math
from typing import List, Optional
from typing_extensions import Literal

from .._models import BaseModel

__all__ = ["NecessaryScanReport", "RadiusScan"]


class RadiusScan(BaseModel):
    r: float

    min_value: float
    """Smallest arc integral of Re P[alpha, f] found at this radius."""

    theta1: float

    theta2: float

    full_circle: float
    """Integral over the whole circle; equals 2 pi alpha."""

    quad_points: int

    quad_error: float
    """Richardson estimate from the same scan at half the points."""

    truncation_error: Optional[float] = None
    """Bound ``2 pi sup |tail|`` of the P series on the circle; None when P is evaluated in closed form."""

    honest: bool = True
    """False when `truncation_error` exceeds HONEST_TAIL; such radii do not enter `min_value`."""


class NecessaryScanReport(BaseModel):
    alpha: float

    grid: int

    evaluation: Literal["closed-form", "series"]
    """How P[alpha, f] was evaluated on the circle."""

    radii: List[RadiusScan]

    min_value: float
    """Smallest arc integral over the honest radii."""

    exceeds_bound: bool
    """min_value > -pi. Sampled evidence for the bound, not a proof of it."""

    evidence_only: bool = True

    @property
    def margin(self) -> float:
        return self.min_value + math.pi
