from .hardy import (
    HardyResource,
    AsyncHardyResource,
)
from .coeffs import (
    CoeffsResource,
    AsyncCoeffsResource,
)
from .bazilevic import (
    BazilevicResource,
    AsyncBazilevicResource,
)

__all__ = [
    "BazilevicResource",
    "AsyncBazilevicResource",
    "CoeffsResource",
    "AsyncCoeffsResource",
    "HardyResource",
    "AsyncHardyResource",
]
