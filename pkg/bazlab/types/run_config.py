from __future__ import annotations

from typing import List, Optional
from typing_extensions import Literal

from pydantic import Field, ConfigDict, model_validator

from .._models import BaseModel
from .._constants import MIN_ORDER, DEFAULT_ORDER, MIN_MEANS_POINTS, DEFAULT_QUAD_POINTS
from .._exceptions import ConfigError

__all__ = ["RunConfig", "Command"]

Command = Literal["construct", "coeffs", "bounds", "sweep", "means", "necessary", "correspond"]

# commands whose results are quadrature values
QUADRATURE_COMMANDS = ("means", "necessary")


class RunConfig(BaseModel):
    """Fully resolved settings of one command-line run; embedded in every report it produces."""

    model_config = ConfigDict(populate_by_name=True)

    command: Command

    spec_path: Optional[str] = None

    order: int = Field(DEFAULT_ORDER, alias="N")

    seed: Optional[int] = None

    quad_points: int = Field(DEFAULT_QUAD_POINTS, alias="K")

    out: Optional[str] = None
    """Output file; standard output when unset."""

    format: Literal["json", "csv"] = "json"

    alpha: Optional[float] = None

    p: Optional[float] = None

    radii: Optional[List[float]] = None

    trials: int = 0

    which: Optional[Literal[1, 2]] = None

    theta1: Optional[float] = None

    theta2: Optional[float] = None

    r: Optional[float] = None

    koebe_theta: Optional[float] = None
    """When set, `means` samples the Koebe witness at this angle instead of a spec."""

    plot: Optional[str] = None
    """Prefix for the two plot-data files written by `means`."""

    threads: Optional[int] = Field(None, exclude=True)
    """Worker cap. Results do not depend on it, so it is left out of reports."""

    @model_validator(mode="after")
    def _check(self) -> RunConfig:
        if self.order < MIN_ORDER:
            raise ConfigError(f"N must be at least {MIN_ORDER}, got {self.order}")
        if self.command in QUADRATURE_COMMANDS and self.quad_points < MIN_MEANS_POINTS:
            raise ConfigError(f"K must be at least {MIN_MEANS_POINTS} for `{self.command}`, got {self.quad_points}")
        if self.command == "sweep":
            if self.seed is None:
                raise ConfigError("`sweep` needs --seed")
            if self.which is None:
                raise ConfigError("`sweep` needs --which")
            if self.alpha is None:
                raise ConfigError("`sweep` needs --alpha")
            if self.trials < 0:
                raise ConfigError(f"--trials cannot be negative, got {self.trials}")
        if self.threads is not None and self.threads < 0:
            raise ConfigError(f"threads must be >= 0, got {self.threads}")
        return self
