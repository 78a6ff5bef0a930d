from __future__ import annotations

from typing import List, Optional
from typing_extensions import Literal

from pydantic import Field, ConfigDict

from .._models import BaseModel
from .herglotz_measure import HerglotzMeasure
from .bazilevic_spec_params import BazilevicSpecParams

__all__ = ["SweepReport", "SweepArgmax", "Counterexample"]


class SweepArgmax(BaseModel):
    trial: int

    n: int


class Counterexample(BaseModel):
    trial: int

    n: int

    ratio: float

    measure: HerglotzMeasure

    spec: BazilevicSpecParams
    """Replayable description of the offending member."""


class SweepReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    conjecture: Literal[1, 2]

    alpha: float

    trials: int

    seed: int

    order: int = Field(alias="N")

    n_max: int

    max_ratio: float

    argmax: Optional[SweepArgmax] = None

    counterexamples: List[Counterexample] = Field(default_factory=list)
