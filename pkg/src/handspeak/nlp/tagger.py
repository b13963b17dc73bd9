"""Lexicon-plus-heuristics part-of-speech tagger.

Lookup goes through the bundled word -> most-frequent-tag table first;
unknown words fall through a short suffix/shape rule chain. Every token gets
exactly one tag from the closed set, so downstream stages never see holes.
"""

from __future__ import annotations

from .resources import NlpResources, default_resources
from .types import PosTag, TaggedToken, Token


def _heuristic_tag(surface: str, index: int) -> PosTag:
    lower = surface.lower()
    if lower.isdigit():
        return PosTag.CD
    if len(lower) >= 5 and lower.endswith("ing"):
        return PosTag.VBG
    if len(lower) >= 4 and lower.endswith("ed"):
        return PosTag.VBD
    if len(lower) >= 4 and lower.endswith("ly"):
        return PosTag.RB
    if len(lower) >= 3 and lower.endswith("s") and not lower.endswith("ss"):
        return PosTag.NNS
    if index > 0 and surface[0].isupper():
        return PosTag.NNP
    return PosTag.NN


def tag_pos(tokens: list[Token], resources: NlpResources | None = None) -> list[TaggedToken]:
    if resources is None:
        resources = default_resources()
    lexicon = resources.tag_lexicon
    tagged = []
    for tok in tokens:
        tag = lexicon.get(tok.surface.lower())
        if tag is None:
            tag = _heuristic_tag(tok.surface, tok.index)
        tagged.append(TaggedToken(tok, tag))
    return tagged
