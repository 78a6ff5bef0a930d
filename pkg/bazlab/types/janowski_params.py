from __future__ import annotations

import numpy as np
from pydantic import model_validator

from .._models import BaseModel
from .._exceptions import InvalidJanowski

__all__ = ["JanowskiParams"]


class JanowskiParams(BaseModel):
    """The pair ``(A, B)`` of the Mobius map ``phi(z) = (1 + A z) / (1 + B z)``."""

    A: float = 1.0

    B: float = -1.0

    @model_validator(mode="after")
    def _check_range(self) -> JanowskiParams:
        if not (-1.0 <= self.B < self.A <= 1.0):
            raise InvalidJanowski(self.A, self.B)
        return self

    def phi(self, w: np.ndarray) -> np.ndarray:
        return (1.0 + self.A * w) / (1.0 + self.B * w)

    def phi_inverse(self, v: np.ndarray) -> np.ndarray:
        return (v - 1.0) / (self.A - self.B * v)
