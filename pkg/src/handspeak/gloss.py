"""Lowering of (tense, keywords) into an ordered, asset-resolved playlist.

Keywords with a word-level sign become single Word items; anything else is
fingerspelled character by character. A tense marker gloss ("Before",
"Will" or "Now") is prepended when the sentence carries tense.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .lexicon import GlossKind, LexiconView
from .nlp.types import Tense

log = logging.getLogger(__name__)

TENSE_MARKERS = {
    Tense.PAST: "Before",
    Tense.FUTURE: "Will",
    Tense.PRESENT: "Now",
}


class MissingAsset(Exception):
    """A mandatory letter/digit/marker asset is absent: broken asset pack."""

    def __init__(self, item):
        super().__init__(f"no asset registered for {item.kind.value}:{item.value}")
        self.item = item


@dataclass(frozen=True)
class GlossItem:
    kind: GlossKind
    value: str

    def __post_init__(self):
        v = self.value
        if self.kind is GlossKind.LETTER and not (len(v) == 1 and "A" <= v <= "Z"):
            raise ValueError(f"letter gloss must be single uppercase A-Z: {v!r}")
        if self.kind is GlossKind.DIGIT and not (len(v) == 1 and v.isdigit()):
            raise ValueError(f"digit gloss must be single 0-9: {v!r}")
        if self.kind is GlossKind.TENSE_MARKER and v not in TENSE_MARKERS.values():
            raise ValueError(f"unknown tense marker: {v!r}")


@dataclass(frozen=True)
class PlaylistEntry:
    item: GlossItem
    asset_uri: str
    display_label: str


@dataclass(frozen=True)
class PlaylistManifest:
    original_sentence: str
    tense: Tense
    keywords: tuple[str, ...]
    entries: tuple[PlaylistEntry, ...]

    def to_dict(self) -> dict:
        return {
            "sentence": self.original_sentence,
            "tense": self.tense.value,
            "keywords": list(self.keywords),
            "entries": [
                {"kind": e.item.kind.value, "value": e.item.value,
                 "asset_uri": e.asset_uri, "label": e.display_label}
                for e in self.entries
            ],
        }


def fingerspell(word: str) -> list[GlossItem]:
    items = []
    for ch in word.lower():
        if "a" <= ch <= "z":
            items.append(GlossItem(GlossKind.LETTER, ch.upper()))
        elif ch.isdigit():
            items.append(GlossItem(GlossKind.DIGIT, ch))
        else:
            log.warning("skipping unspellable character %r in %r", ch, word)
    return items


def plan_glosses(tense: Tense, keywords: list[str],
                 lexicon: LexiconView) -> list[GlossItem]:
    plan = []
    if tense is not Tense.NONE:
        plan.append(GlossItem(GlossKind.TENSE_MARKER, TENSE_MARKERS[tense]))
    for keyword in keywords:
        if lexicon.has_word(keyword):
            plan.append(GlossItem(GlossKind.WORD, keyword.lower()))
        else:
            plan.extend(fingerspell(keyword))
    return plan


def _resolve(item: GlossItem, lexicon: LexiconView) -> PlaylistEntry:
    entry = lexicon.lookup(item.kind, item.value.lower())
    if entry is None:
        raise MissingAsset(item)
    return PlaylistEntry(item=item, asset_uri=f"/api/assets/{entry.asset_id}",
                         display_label=item.value)


def emit_playlist(sentence: str, tense: Tense, keywords: list[str],
                  plan: list[GlossItem], lexicon: LexiconView) -> PlaylistManifest:
    return PlaylistManifest(
        original_sentence=sentence,
        tense=tense,
        keywords=tuple(keywords),
        entries=tuple(_resolve(item, lexicon) for item in plan),
    )


def translate(sentence: str, tense: Tense, keywords: list[str],
              lexicon: LexiconView) -> PlaylistManifest:
    """plan_glosses + emit_playlist in one step."""
    plan = plan_glosses(tense, keywords, lexicon)
    return emit_playlist(sentence, tense, keywords, plan, lexicon)
