from __future__ import annotations

from pydantic import model_validator

from .._models import BaseModel
from .._constants import UNIT_TOL
from .._exceptions import SpecInvalid
from ..lib.powser import Series

__all__ = ["PsiSeries"]


class PsiSeries(BaseModel):
    """``psi = (f/z)^alpha = 1 + sum A_n z^n``."""

    coeffs: Series

    alpha: float

    @model_validator(mode="after")
    def _check(self) -> PsiSeries:
        if abs(self.coeffs[0] - 1.0) > UNIT_TOL:
            raise SpecInvalid(f"psi must have A_0 = 1, got {self.coeffs[0]!r}")
        if not (self.alpha > 0):
            raise SpecInvalid(f"alpha must be positive, got {self.alpha!r}")
        return self

    @property
    def order(self) -> int:
        return self.coeffs.order
