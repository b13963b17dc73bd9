"""Text normalization and tokenization.

Normalization exists mainly to make apostrophes harmless: curly quotes are
folded to ASCII, known contractions are expanded from the bundled table, and
remaining punctuation (except intra-word hyphens) is stripped.
"""

from __future__ import annotations

import re
import unicodedata

from .resources import NlpResources, default_resources
from .types import Token

_APOSTROPHES = str.maketrans({"’": "'", "‘": "'", "ʼ": "'", "`": "'"})
_EDGE_PUNCT = re.compile(r"^[^\w]+|[^\w]+$")


def _clean_token(tok: str) -> str:
    """Strip punctuation, keeping letters, digits and intra-word hyphens."""
    out = []
    for i, ch in enumerate(tok):
        if ch.isalnum():
            out.append(ch)
        elif ch == "-" and 0 < i < len(tok) - 1 and tok[i - 1].isalnum() and tok[i + 1].isalnum():
            out.append(ch)
    return "".join(out)


def normalize_text(raw: str, resources: NlpResources | None = None) -> str:
    if resources is None:
        resources = default_resources()
    text = unicodedata.normalize("NFC", raw).translate(_APOSTROPHES)
    pieces = []
    for tok in text.split():
        stripped = _EDGE_PUNCT.sub("", tok)
        expansion = resources.contractions.get(stripped.lower())
        if expansion is not None:
            pieces.append(expansion)
            continue
        cleaned = _clean_token(stripped)
        if cleaned:
            pieces.append(cleaned)
    return " ".join(pieces)


def tokenize(sentence: str) -> list[Token]:
    """Whitespace-split an already normalized sentence into indexed tokens."""
    return [Token(surface, i) for i, surface in enumerate(sentence.split())]
