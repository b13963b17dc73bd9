"""Loaders for the bundled tagger/lemmatizer data files.

All four files are plain UTF-8 text so deployers can edit them:
  tag_lexicon.tsv       word<TAB>TAG
  stopwords.txt         one word per line, '#' comments
  lemma_exceptions.tsv  form<TAB>lemma<TAB>pos   (pos in v/n/a/r)
  contractions.tsv      contraction<TAB>expansion
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources as importlib_resources
from pathlib import Path

from .types import PosTag

log = logging.getLogger(__name__)

DATA_PACKAGE = "handspeak.nlp.data"

# Modals that carry tense; they must never be filtered as stop words.
_TENSE_BEARING = {"will", "shall"}


def _read_lines(path: str | Path | None, default_name: str) -> list[str]:
    if path is None:
        text = importlib_resources.files(DATA_PACKAGE).joinpath(default_name).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return text.splitlines()


def load_tag_lexicon(path: str | Path | None = None) -> dict[str, PosTag]:
    lexicon = {}
    for line in _read_lines(path, "tag_lexicon.tsv"):
        if not line.strip():
            continue
        word, tag = line.split("\t")
        lexicon[word] = PosTag(tag)
    return lexicon


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    words = set()
    for line in _read_lines(path, "stopwords.txt"):
        word = line.strip().lower()
        if not word or word.startswith("#"):
            continue
        if word in _TENSE_BEARING:
            log.warning("stop-word list contains %r; ignored (modals carry tense)", word)
            continue
        words.add(word)
    return frozenset(words)


def load_lemma_exceptions(path: str | Path | None = None) -> dict[tuple[str, str], str]:
    table = {}
    for line in _read_lines(path, "lemma_exceptions.tsv"):
        if not line.strip():
            continue
        form, lemma, pos = line.split("\t")
        table[(form, pos)] = lemma
    return table


def load_contractions(path: str | Path | None = None) -> dict[str, str]:
    table = {}
    for line in _read_lines(path, "contractions.tsv"):
        if not line.strip():
            continue
        contraction, expansion = line.split("\t")
        table[contraction.lower()] = expansion
    return table


@dataclass(frozen=True)
class NlpResources:
    tag_lexicon: dict[str, PosTag]
    stopwords: frozenset[str]
    lemma_exceptions: dict[tuple[str, str], str]
    contractions: dict[str, str]

    @classmethod
    def load(cls, tag_lexicon=None, stopwords=None, lemma_exceptions=None,
             contractions=None) -> "NlpResources":
        return cls(
            tag_lexicon=load_tag_lexicon(tag_lexicon),
            stopwords=load_stopwords(stopwords),
            lemma_exceptions=load_lemma_exceptions(lemma_exceptions),
            contractions=load_contractions(contractions),
        )


@lru_cache(maxsize=1)
def default_resources() -> NlpResources:
    return NlpResources.load()
