from __future__ import annotations

from typing import Any, ClassVar
from typing_extensions import Literal, override

import pydantic
from pydantic import ConfigDict

__all__ = ["BaseModel"]


class BaseModel(pydantic.BaseModel):
    model_config: ClassVar[ConfigDict] = ConfigDict(
        extra="forbid",
        frozen=True,
        arbitrary_types_allowed=True,
        ser_json_inf_nan="constants",
    )

    def to_dict(
        self,
        *,
        mode: Literal["json", "python"] = "json",
        by_alias: bool = True,
        exclude_none: bool = False,
    ) -> dict[str, Any]:
        """Recursively generate a dictionary representation of the model.

        Args:
            mode:
                If mode is 'json', the dictionary will only contain JSON serializable types, e.g. a
                `Series` becomes a list of `[re, im]` pairs.
                If mode is 'python', the dictionary may contain any Python objects.

            by_alias: Whether to use the JSON names of aliased fields (e.g. `N` for `order`). Defaults to `True`.
            exclude_none: Whether to exclude fields that have a value of `None` from the output.
        """
        return self.model_dump(mode=mode, by_alias=by_alias, exclude_none=exclude_none)

    def to_json(self, *, indent: int | None = 2, exclude_none: bool = False) -> str:
        """Generates a JSON string representing this model.

        Output is deterministic: identical models produce byte-identical strings.

        Args:
            indent: Indentation to use in the JSON output. If `None` is passed, the output will be compact. Defaults to `2`
            exclude_none: Whether to exclude fields that have a value of `None`.
        """
        return self.model_dump_json(indent=indent, by_alias=True, exclude_none=exclude_none)

    @override
    def __str__(self) -> str:
        return f"{self.__repr_name__()}({self.__repr_str__(', ')})"  # type: ignore[misc]
