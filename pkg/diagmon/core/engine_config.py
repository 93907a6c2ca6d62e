from typing import Literal

import yaml
from pydantic import BaseModel, Field


class LimitsConfig(BaseModel):
    """Caps that keep enumerations at desk scale.

    Attributes:
        max_elements: *Optional.* Largest element set a closure may build before giving up.
        max_bell_degree: *Optional.* Largest degree for which every bipartition is listed.
        word_cap: *Optional.* Default word length cap for congruence closure.
        geodesic_cap: *Optional.* Largest degree accepted for geodesic normal forms.
        congruence_max_words: *Optional.* Largest number of words a congruence run may hold.
    """

    max_elements: int = Field(default=2_000_000, ge=1)
    max_bell_degree: int = Field(default=5, ge=0)
    word_cap: int = Field(default=12, ge=1)
    geodesic_cap: int = Field(default=7, ge=1)
    congruence_max_words: int = Field(default=2_000_000, ge=1)


class OutputConfig(BaseModel):
    """
    Output defaults of the command line.

    Attributes:
        format: Default rendering, one of ``text``, ``json`` or ``csv``.
    """

    format: Literal["text", "json", "csv"] = "text"


class EngineConfig(BaseModel):
    """
    Configuration for the whole engine.

    Attributes:
        limits: Enumeration and word caps.
        output: Command line rendering defaults.
    """

    limits: LimitsConfig = LimitsConfig()
    output: OutputConfig = OutputConfig()

    @classmethod
    def from_yaml(cls, path) -> "EngineConfig":
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
        return cls(**(data or {}))
