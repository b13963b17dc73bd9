"""Sentence tense detection from verb-tag counts.

Past counts VBD+VBN, present counts VBG+VBP+VBZ, future counts MD.  The
winner is the largest count with ties broken future > past > present; a
sentence with no counted verb tags has no tense.
"""

from __future__ import annotations

from .types import PosTag, TaggedToken, Tense, TenseCounts

_PAST_TAGS = {PosTag.VBD, PosTag.VBN}
_PRESENT_TAGS = {PosTag.VBG, PosTag.VBP, PosTag.VBZ}


def count_tenses(tagged: list[TaggedToken]) -> TenseCounts:
    past = present = future = 0
    for tt in tagged:
        if tt.tag in _PAST_TAGS:
            past += 1
        elif tt.tag in _PRESENT_TAGS:
            present += 1
        elif tt.tag is PosTag.MD:
            future += 1
    return TenseCounts(past=past, present=present, future=future)


def detect_tense(tagged: list[TaggedToken]) -> tuple[Tense, TenseCounts]:
    counts = count_tenses(tagged)
    if counts.total == 0:
        return Tense.NONE, counts
    # tie-break priority: future > past > present
    best = Tense.FUTURE
    best_count = counts.future
    if counts.past > best_count:
        best, best_count = Tense.PAST, counts.past
    if counts.present > best_count:
        best = Tense.PRESENT
    return best, counts
