from .lemmatizer import lemmatize
from .normalize import normalize_text, tokenize
from .pipeline import extract_keywords, filter_stopwords
from .resources import NlpResources, default_resources
from .tagger import tag_pos
from .tense import count_tenses, detect_tense
from .types import PosTag, TaggedToken, Tense, TenseCounts, Token

__all__ = [
    "PosTag", "TaggedToken", "Tense", "TenseCounts", "Token",
    "NlpResources", "default_resources",
    "normalize_text", "tokenize", "tag_pos", "detect_tense", "count_tenses",
    "filter_stopwords", "lemmatize", "extract_keywords",
]
