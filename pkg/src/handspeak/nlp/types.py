"""Core token and tag types for the English front end."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class PosTag(enum.Enum):
    NN = "NN"
    NNS = "NNS"
    NNP = "NNP"
    VB = "VB"
    VBD = "VBD"
    VBG = "VBG"
    VBN = "VBN"
    VBP = "VBP"
    VBZ = "VBZ"
    MD = "MD"
    JJ = "JJ"
    RB = "RB"
    PRP = "PRP"
    DT = "DT"
    IN = "IN"
    CC = "CC"
    CD = "CD"
    TO = "TO"
    UH = "UH"
    WP = "WP"
    WRB = "WRB"
    OTHER = "OTHER"

    @property
    def is_verb(self) -> bool:
        return self.value.startswith("V")

    @property
    def is_noun(self) -> bool:
        return self.value.startswith("N")


class Tense(enum.Enum):
    PAST = "Past"
    PRESENT = "Present"
    FUTURE = "Future"
    NONE = "None"


@dataclass(frozen=True)
class Token:
    surface: str
    index: int

    def __post_init__(self):
        if not self.surface or any(c.isspace() for c in self.surface):
            raise ValueError(f"invalid token surface: {self.surface!r}")


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: PosTag
    lemma: str = ""


@dataclass(frozen=True)
class TenseCounts:
    past: int = 0
    present: int = 0
    future: int = 0

    @property
    def total(self) -> int:
        return self.past + self.present + self.future
