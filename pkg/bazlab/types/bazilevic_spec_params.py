from __future__ import annotations

from typing import List, Union, Optional

from pydantic import Field, ConfigDict, model_validator

from .._models import BaseModel
from .._constants import DEFAULT_ORDER
from .._exceptions import SpecInvalid
from ..lib.powser import Series
from .omega_spec import OmegaSpec
from .janowski_params import JanowskiParams
from .herglotz_measure import HerglotzMeasure

__all__ = ["BazilevicSpecParams", "HParams"]


class HParams(BaseModel):
    """The Caratheodory factor, given either by its Herglotz measure or by explicit coefficients."""

    measure: Optional[HerglotzMeasure] = None

    series: Optional[Series] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> HParams:
        if (self.measure is None) == (self.series is None):
            raise SpecInvalid("h must give exactly one of `measure` or `series`")
        return self


class BazilevicSpecParams(BaseModel):
    """JSON document describing a member of the class, before any series is built."""

    model_config = ConfigDict(populate_by_name=True)

    alphas: List[float]
    """Exponents alpha_1 .. alpha_m, all positive."""

    beta: float = 0.0
    """Imaginary part of gamma; only 0 is supported."""

    factors: List[Union[OmegaSpec, Series]] = Field(default_factory=list)
    """One entry per exponent: a Schwarz function recipe for a Janowski starlike factor,
    or the explicit unit series g_i/z. An empty list means every g_i is z."""

    h: HParams

    janowski: JanowskiParams = Field(default_factory=JanowskiParams)
    """Janowski parameters used for the factors given as Schwarz recipes."""

    order: int = Field(DEFAULT_ORDER, alias="N")
