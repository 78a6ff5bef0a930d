from __future__ import annotations

from typing import List, Optional

from .._models import BaseModel

__all__ = ["BoundReport", "BoundRecord", "DominationReport"]


class BoundRecord(BaseModel):
    n: int

    abs_An: float

    bound: float
    """2 alpha / (n + alpha)."""

    ratio: float
    """|A_n| (n + alpha) / (2 alpha)."""


class BoundReport(BaseModel):
    alpha: float

    records: List[BoundRecord]

    max_ratio: float

    witness_degree: Optional[int] = None
    """Degree attaining `max_ratio`; None when psi has no coefficients beyond A_0."""

    def csv_rows(self) -> List[List[object]]:
        return [["n", "abs_An", "bound", "ratio"]] + [[r.n, r.abs_An, r.bound, r.ratio] for r in self.records]


class DominationReport(BaseModel):
    dominated: bool
    """True iff |A_n| <= A_n(G) + slack for every degree."""

    margin: float
    """min_n (A_n(G) - |A_n|); negative when domination fails."""

    worst_degree: Optional[int] = None
