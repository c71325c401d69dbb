"""
Sentence preprocessing: tokenize, drop stopwords, stem.

TextPreprocessor also records the term-count progression
raw tokens -> after stopwords -> vocabulary size.
"""
import logging
from dataclasses import dataclass
from typing import Iterable

from .stemmer import stem_all
from .stoplist import StopList, remove_stopwords
from .tokenizer import TokenizeMode, tokenize
from .vocabulary import Vocabulary, build_vocabulary

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreprocessStats:
    raw_tokens: int
    after_stopwords: int
    vocabulary_size: int

    def as_rows(self) -> list[tuple[str, int]]:
        return [
            ("raw_tokens", self.raw_tokens),
            ("after_stopwords", self.after_stopwords),
            ("vocabulary_terms", self.vocabulary_size),
        ]


class TextPreprocessor:
    """Turns sentence text into stemmed, stopword-free tokens."""

    def __init__(self, stoplist: StopList, mode: TokenizeMode = TokenizeMode.STANDARD):
        self.stoplist = stoplist
        self.mode = TokenizeMode(mode)

    def tokens(self, text: str) -> list[str]:
        return stem_all(remove_stopwords(tokenize(text, self.mode), self.stoplist))

    def corpus_tokens(self, texts: Iterable[str]) -> list[list[str]]:
        return [self.tokens(text) for text in texts]

    def fit_vocabulary(
        self, texts: Iterable[str], min_freq: int
    ) -> tuple[Vocabulary, list[list[str]], PreprocessStats]:
        """Vocabulary over `texts` plus the processed token lists and counts."""
        raw_total = 0
        kept_total = 0
        processed = []
        for text in texts:
            raw = tokenize(text, self.mode)
            kept = remove_stopwords(raw, self.stoplist)
            raw_total += len(raw)
            kept_total += len(kept)
            processed.append(stem_all(kept))
        vocabulary = build_vocabulary(processed, min_freq)
        stats = PreprocessStats(raw_total, kept_total, len(vocabulary))
        logger.info(
            "Preprocessed %d sentences: %d tokens -> %d after stopwords -> %d terms",
            len(processed), stats.raw_tokens, stats.after_stopwords, stats.vocabulary_size,
        )
        return vocabulary, processed, stats
