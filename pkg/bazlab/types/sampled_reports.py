from __future__ import annotations

from typing import Optional

from .._models import BaseModel

__all__ = ["PositivityReport", "StarlikeReport"]


class PositivityReport(BaseModel):
    """Sampled minimum of Re p on a grid of circles. Sampling can refute positivity, never certify it."""

    min_real_part: float

    radius: float
    """Radius of the sample attaining the minimum."""

    theta: float
    """Angle of the sample attaining the minimum."""

    violated: bool
    """True when the minimum is below -tolerance."""

    tolerance: float


class StarlikeReport(BaseModel):
    """Modulus of w = phi^{-1}(z g'/g) on sampled circles; membership needs it below 1."""

    max_modulus: float

    radius: Optional[float] = None

    member: bool
