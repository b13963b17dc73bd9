"""The full keyword-extraction pipeline.

normalize -> tokenize -> tag -> detect tense -> drop modals -> drop stop
words -> lemmatize. Modal verbs are removed once tense is known: their
contribution survives as the tense value (and later as the tense-marker
gloss), so they never appear as keywords themselves.
"""

from __future__ import annotations

from .lemmatizer import lemmatize
from .normalize import normalize_text, tokenize
from .resources import NlpResources, default_resources
from .tagger import tag_pos
from .tense import detect_tense
from .types import PosTag, TaggedToken, Tense


def filter_stopwords(tagged: list[TaggedToken],
                     stops: frozenset[str]) -> list[TaggedToken]:
    return [tt for tt in tagged if tt.token.surface.lower() not in stops]


def extract_keywords(sentence: str,
                     resources: NlpResources | None = None) -> tuple[Tense, list[str]]:
    if resources is None:
        resources = default_resources()
    normalized = normalize_text(sentence, resources)
    tagged = tag_pos(tokenize(normalized), resources)
    tense, _counts = detect_tense(tagged)
    tagged = [tt for tt in tagged if tt.tag is not PosTag.MD]
    tagged = filter_stopwords(tagged, resources.stopwords)
    return tense, [lemmatize(tt, resources).lemma for tt in tagged]
