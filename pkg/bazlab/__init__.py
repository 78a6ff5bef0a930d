import typing as _t

from . import types
from ._client import Workbench, AsyncWorkbench
from ._models import BaseModel
from ._version import __title__, __version__
from .lib.powser import Series
from ._exceptions import (
    BazlabError,
    SeriesError,
    ConfigError,
    SpecInvalid,
    AlphaMismatch,
    InvalidMeasure,
    LengthMismatch,
    OmegaNotSchwarz,
    QuadratureError,
    SpecParseError,
    AlphaOutOfRange,
    BetaUnsupported,
    InvalidJanowski,
    ValidationError,
    ZeroConstantTerm,
    RadiusOutOfRange,
    CounterexampleFound,
    InvariantViolation,
    NormalizationError,
    NonUnitConstantTerm,
    DivisionByVanishing,
    NonzeroInnerConstant,
    TruncationInsufficient,
)
from ._utils._logs import setup_logging as _setup_logging

__all__ = [
    "types",
    "__version__",
    "__title__",
    "Series",
    "BaseModel",
    "Workbench",
    "AsyncWorkbench",
    "BazlabError",
    "ValidationError",
    "ConfigError",
    "SpecParseError",
    "SeriesError",
    "ZeroConstantTerm",
    "NonUnitConstantTerm",
    "NonzeroInnerConstant",
    "RadiusOutOfRange",
    "QuadratureError",
    "InvalidMeasure",
    "InvalidJanowski",
    "OmegaNotSchwarz",
    "BetaUnsupported",
    "SpecInvalid",
    "DivisionByVanishing",
    "AlphaMismatch",
    "NormalizationError",
    "LengthMismatch",
    "AlphaOutOfRange",
    "TruncationInsufficient",
    "InvariantViolation",
    "CounterexampleFound",
]

_setup_logging()

# Update the __module__ attribute for exported symbols so that
# tracebacks show bazlab.SpecInvalid rather than bazlab._exceptions.SpecInvalid.
__locals = locals()
for __name in __all__:
    if not __name.startswith("__") and not _t.TYPE_CHECKING:
        try:
            __locals[__name].__module__ = "bazlab"
        except (TypeError, AttributeError):
            # modules and builtins reject the assignment
            pass
