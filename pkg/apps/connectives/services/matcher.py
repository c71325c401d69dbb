"""
Rule-based causal sentence matching.

A sentence is causal when it contains a lexicon phrase (case-insensitive,
on word boundaries) or a word whose Porter stem is a lexicon verb stem.
Longer phrases shadow the phrases they contain: a sentence with
"as a result" never reports "as" or the verb "result". The leftmost
surviving match is reported.
"""
import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from apps.corpus.services.corpus_models import Document, Sentence
from apps.preprocess.services.stemmer import stem

from .lexicon import ConnectiveLexicon

logger = logging.getLogger(__name__)

AMBIGUOUS_WORDS = frozenset({"as", "since", "so"})
MIN_CLAUSE_TOKENS = 3  # words that must follow an ambiguous connective in strict mode

_WORD = re.compile(r"[A-Za-z]+")
_CLAUSE_TOKEN = re.compile(r"[A-Za-z0-9']+")


class MatchCategory(str, Enum):
    TRANSITION = "transition"
    CONJUNCTION = "conjunction"
    VERB_PHRASE = "verb_phrase"


@dataclass(frozen=True)
class CausalMatch:
    sentence: Sentence
    connective: str  # lexicon phrase, or the verb stem
    category: MatchCategory
    char_span: tuple[int, int]

    @property
    def surface(self) -> str:
        start, end = self.char_span
        return self.sentence.text[start:end]


def _contains_phrase(longer: str, shorter: str) -> bool:
    return longer != shorter and f" {shorter} " in f" {longer} "


class ConnectiveMatcher:
    """Compiled matcher for one lexicon."""

    def __init__(self, lexicon: ConnectiveLexicon, strict_ambiguous: bool = False):
        self.lexicon = lexicon
        self.strict_ambiguous = strict_ambiguous
        self.categories = lexicon.phrases
        phrases = sorted(self.categories, key=lambda p: (-len(p), p))
        self.pattern = None
        if phrases:
            alternatives = "|".join(
                r"\s+".join(re.escape(word) for word in phrase.split()) for phrase in phrases
            )
            self.pattern = re.compile(rf"\b(?:{alternatives})\b", re.IGNORECASE)

    def _phrase_candidates(self, text: str) -> list[tuple[int, int, str, MatchCategory]]:
        if self.pattern is None:
            return []
        found = []
        for m in self.pattern.finditer(text):
            phrase = " ".join(m.group(0).lower().split())
            if self.strict_ambiguous and phrase in AMBIGUOUS_WORDS:
                if len(_CLAUSE_TOKEN.findall(text[m.end():])) < MIN_CLAUSE_TOKENS:
                    continue
            found.append((m.start(), m.end(), phrase, MatchCategory(self.categories[phrase])))
        matched = {phrase for _, _, phrase, _ in found}
        return [
            c for c in found
            if not any(_contains_phrase(longer, c[2]) for longer in matched)
        ]

    def _verb_candidates(self, text: str, taken: list[tuple[int, int]]):
        if not self.lexicon.verb_stems:
            return []
        found = []
        for m in _WORD.finditer(text):
            word_stem = stem(m.group(0).lower())
            if word_stem not in self.lexicon.verb_stems:
                continue
            if any(start < m.end() and m.start() < end for start, end in taken):
                continue  # part of a longer phrase
            found.append((m.start(), m.end(), word_stem, MatchCategory.VERB_PHRASE))
        return found

    def candidates(self, text: str) -> list[tuple[int, int, str, MatchCategory]]:
        """Every surviving match, leftmost first."""
        phrases = self._phrase_candidates(text)
        all_phrase_spans = (
            [(m.start(), m.end()) for m in self.pattern.finditer(text)] if self.pattern else []
        )
        verbs = self._verb_candidates(text, all_phrase_spans)
        return sorted(phrases + verbs, key=lambda c: (c[0], -(c[1] - c[0])))

    def match(self, sentence: Sentence) -> Optional[CausalMatch]:
        found = self.candidates(sentence.text)
        if not found:
            return None
        start, end, connective, category = found[0]
        return CausalMatch(sentence, connective, category, (start, end))


@lru_cache(maxsize=16)
def get_matcher(lexicon: ConnectiveLexicon, strict_ambiguous: bool = False) -> ConnectiveMatcher:
    return ConnectiveMatcher(lexicon, strict_ambiguous)


def match_sentence(
    sentence: Sentence, lexicon: ConnectiveLexicon, strict_ambiguous: bool = False
) -> Optional[CausalMatch]:
    return get_matcher(lexicon, strict_ambiguous).match(sentence)


def extract_causal(
    document: Document, lexicon: ConnectiveLexicon, strict_ambiguous: bool = False
) -> list[CausalMatch]:
    """One match per causal sentence, in document order."""
    matcher = get_matcher(lexicon, strict_ambiguous)
    matches = [m for m in map(matcher.match, document.sentences) if m is not None]
    logger.debug("%s: %d of %d sentences causal", document.id, len(matches), len(document.sentences))
    return matches
