"""POS-aware rule lemmatizer: exception table first, then suffix stripping.

Suffix candidates are validated against the bundled tag lexicon; among the
candidates the lexicon knows, the shortest wins. Unknown words get the plain
strip (with final-consonant undoubling) so fingerspelling still sees a
reasonable form.
"""

from __future__ import annotations

from .resources import NlpResources, default_resources
from .types import PosTag, TaggedToken

_VOWELS = "aeiou"


def _pos_category(tag: PosTag) -> str | None:
    if tag.is_verb:
        return "v"
    if tag.is_noun:
        return "n"
    if tag is PosTag.JJ:
        return "a"
    if tag is PosTag.RB:
        return "r"
    return None


def _undouble(stem: str) -> str | None:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS + "sl":
        return stem[:-1]
    return None


def _verb_candidates(word: str) -> list[str]:
    cands = []
    for suffix, add in (("ing", ""), ("ing", "e"), ("ed", ""), ("ed", "e")):
        if word.endswith(suffix) and len(word) > len(suffix) + 2:
            stem = word[: -len(suffix)]
            cands.append(stem + add)
            if not add and (short := _undouble(stem)):
                cands.append(short)
    if word.endswith("ies") and len(word) > 4:
        cands.append(word[:-3] + "y")
    elif word.endswith("es") and len(word) > 3:
        cands.extend([word[:-2], word[:-1]])
    elif word.endswith("s") and len(word) > 2 and not word.endswith(("ss", "us", "is")):
        cands.append(word[:-1])
    return cands


def _noun_candidates(word: str) -> list[str]:
    cands = []
    if word.endswith("ies") and len(word) > 4:
        cands.append(word[:-3] + "y")
    elif word.endswith("es") and len(word) > 3:
        cands.extend([word[:-2], word[:-1]])
    if word.endswith("s") and len(word) > 2 and not word.endswith(("ss", "us", "is")):
        cands.append(word[:-1])
    return cands


def _best(word: str, cands: list[str], category: str,
          lexicon: dict[str, PosTag]) -> str:
    prefix = {"v": "V", "n": "N"}[category]
    known = [c for c in cands if c in lexicon]
    if known:
        # prefer candidates whose lexicon tag agrees with the POS, then shortest
        agreeing = [c for c in known if lexicon[c].value.startswith(prefix)]
        pool = agreeing or known
        return min(pool, key=lambda c: (len(c), c))
    if not cands:
        return word
    fallback = cands[0]
    return _undouble(fallback) or fallback


def lemmatize(tagged: TaggedToken, resources: NlpResources | None = None) -> TaggedToken:
    if resources is None:
        resources = default_resources()
    word = tagged.token.surface.lower()
    category = _pos_category(tagged.tag)
    if category is None:
        return TaggedToken(tagged.token, tagged.tag, word)
    exception = resources.lemma_exceptions.get((word, category))
    if exception is not None:
        return TaggedToken(tagged.token, tagged.tag, exception)
    if category == "v":
        lemma = _best(word, _verb_candidates(word), "v", resources.tag_lexicon)
    elif category == "n":
        lemma = _best(word, _noun_candidates(word), "n", resources.tag_lexicon)
    else:
        lemma = word  # adjectives/adverbs: exception table only
    return TaggedToken(tagged.token, tagged.tag, lemma or word)
