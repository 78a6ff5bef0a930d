from __future__ import annotations

from typing import Any, List, Optional
from typing_extensions import Literal

__all__ = [
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


class BazlabError(Exception):
    message: str
    exit_status: int = 1

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class ValidationError(BazlabError):
    """Raised when an input violates the precondition of an operation."""

    exit_status: Literal[2] = 2  # pyright: ignore[reportIncompatibleVariableOverride]


class ConfigError(ValidationError):
    pass


class SpecParseError(ValidationError):
    line: Optional[int]
    column: Optional[int]

    def __init__(self, message: str, *, line: Optional[int] = None, column: Optional[int] = None) -> None:
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SeriesError(ValidationError):
    pass


class ZeroConstantTerm(SeriesError):
    def __init__(self, message: str = "Divisor has a vanishing constant term.") -> None:
        super().__init__(message)


class NonUnitConstantTerm(SeriesError):
    constant: complex

    def __init__(self, constant: complex) -> None:
        super().__init__(f"Expected a unit series (constant term 1) but the constant term is {constant!r}")
        self.constant = constant


class NonzeroInnerConstant(SeriesError):
    constant: complex

    def __init__(self, constant: complex) -> None:
        super().__init__(f"Inner series of a composition must vanish at 0, got constant term {constant!r}")
        self.constant = constant


class RadiusOutOfRange(SeriesError):
    radius: float
    r_max: float

    def __init__(self, radius: float, r_max: float) -> None:
        super().__init__(f"Radius {radius!r} is outside the admissible range (0, {r_max!r}]")
        self.radius = radius
        self.r_max = r_max


class QuadratureError(ValidationError):
    points: int
    minimum: int

    def __init__(self, points: int, minimum: int) -> None:
        super().__init__(f"At least {minimum} quadrature points are required, got {points}")
        self.points = points
        self.minimum = minimum


class InvalidMeasure(ValidationError):
    pass


class InvalidJanowski(ValidationError):
    A: float
    B: float

    def __init__(self, A: float, B: float) -> None:
        super().__init__(f"Janowski parameters must satisfy -1 <= B < A <= 1, got A={A!r}, B={B!r}")
        self.A = A
        self.B = B


class OmegaNotSchwarz(ValidationError):
    pass


class BetaUnsupported(ValidationError):
    beta: float

    def __init__(self, beta: float) -> None:
        super().__init__(f"Only beta = 0 is supported, got beta={beta!r}")
        self.beta = beta


class SpecInvalid(ValidationError):
    pass


class DivisionByVanishing(ValidationError):
    pass


class AlphaMismatch(ValidationError):
    expected: float
    received: float

    def __init__(self, expected: float, received: float) -> None:
        super().__init__(f"Function was constructed with alpha={expected!r} but alpha={received!r} was given")
        self.expected = expected
        self.received = received


class NormalizationError(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class AlphaOutOfRange(ValidationError):
    alpha: float

    def __init__(self, alpha: float, allowed: str, *, name: str = "alpha") -> None:
        super().__init__(f"{name}={alpha!r} is outside the admissible range {allowed}")
        self.alpha = alpha


class TruncationInsufficient(ValidationError):
    order: int
    radius: float

    def __init__(self, order: int, radius: float) -> None:
        super().__init__(f"Truncation order {order} is too small to be trusted at radius {radius!r}")
        self.order = order
        self.radius = radius


class InvariantViolation(BazlabError):
    """A proven statement failed numerically. This signals a bug, not a discovery."""

    exit_status: Literal[3] = 3  # pyright: ignore[reportIncompatibleVariableOverride]

    value: float

    def __init__(self, message: str, *, value: float) -> None:
        super().__init__(message)
        self.value = value


class CounterexampleFound(BazlabError):
    """A conjecture sweep produced a ratio above the tolerance."""

    exit_status: Literal[4] = 4  # pyright: ignore[reportIncompatibleVariableOverride]

    replay: List[Any]
    """Specs that reproduce the excess, one per offending trial."""

    def __init__(self, message: str, *, replay: List[Any]) -> None:
        super().__init__(message)
        self.replay = replay
