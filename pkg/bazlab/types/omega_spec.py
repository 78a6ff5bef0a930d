from __future__ import annotations

from typing import List, Optional
from typing_extensions import Literal

from .._models import BaseModel
from ..lib.powser import Series

__all__ = ["OmegaSpec"]


class OmegaSpec(BaseModel):
    """Recipe for a Schwarz function ``omega`` (``omega(0) = 0``, ``|omega| < 1``)."""

    kind: Literal["z", "power", "blaschke", "series"]

    k: int = 1
    """Exponent for `power`: ``omega = scale * z**k``."""

    c: Optional[List[float]] = None
    """Zero ``-c`` of `blaschke` as ``[re, im]``: ``omega = scale * z (z + c) / (1 + conj(c) z)``."""

    scale: float = 1.0
    """Multiplier in (0, 1] applied to `power` and `blaschke`."""

    coeffs: Optional[Series] = None
    """Explicit coefficients for `series`."""
