"""Total vertex colourings over a fixed palette."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import InputError


@dataclass(frozen=True)
class Colouring:
    colours: tuple[int, ...]
    palette: int

    def __post_init__(self):
        if self.palette < 0:
            raise InputError("palette size must be >= 0")
        for c in self.colours:
            if not 0 <= c < self.palette:
                raise InputError(f"colour {c} outside palette of size {self.palette}")

    def __len__(self) -> int:
        return len(self.colours)

    def colours_used(self) -> int:
        return len(set(self.colours))

    def to_json(self) -> str:
        return json.dumps({"palette": self.palette, "colours": list(self.colours)})

    @staticmethod
    def from_json(text: str) -> "Colouring":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad colouring JSON: {exc}") from None
        if isinstance(obj, list):
            colours = obj
            palette = (max(colours) + 1) if colours else 0
        elif isinstance(obj, dict) and "colours" in obj:
            colours = obj["colours"]
            palette = obj.get("palette", (max(colours) + 1) if colours else 0)
        else:
            raise InputError("colouring JSON must be a list or {palette, colours}")
        if not all(isinstance(c, int) for c in colours):
            raise InputError("colours must be integers")
        return Colouring(tuple(colours), int(palette))
