from __future__ import annotations

from .._models import BaseModel
from ..lib.powser import Series

__all__ = ["CorrespondenceReport"]


class CorrespondenceReport(BaseModel):
    alpha: float

    G: Series
    """The close-to-convex partner of g, with G' = h^(1/alpha)."""

    round_trip_error: float
    """Largest coefficient difference between g and from_CI(to_CI(g, alpha), 1/alpha)."""
