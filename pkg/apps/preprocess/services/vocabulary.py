"""
Significant-term vocabulary.

A Vocabulary maps stemmed terms to matrix columns. Built vocabularies are
ordered lexicographically; the SHA-256 fingerprint over the ordered terms
identifies a vocabulary inside model and matrix files.
"""
import hashlib
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from apps.preprocess.exceptions import VocabularyFormatError, VocabularyMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple[str, ...]
    freq: Mapping[str, int] = field(default_factory=dict, compare=False)
    min_freq: int = 0
    index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        index = {term: column for column, term in enumerate(self.terms)}
        if len(index) != len(self.terms):
            raise VocabularyFormatError("vocabulary terms must be unique")
        object.__setattr__(self, "index", index)

    @classmethod
    def from_counts(cls, counts: Mapping[str, int], min_freq: int) -> "Vocabulary":
        kept = {term: n for term, n in counts.items() if n > min_freq}
        return cls(terms=tuple(sorted(kept)), freq=kept, min_freq=min_freq)

    @classmethod
    def from_terms(cls, terms: Sequence[str], freq: Optional[Mapping[str, int]] = None) -> "Vocabulary":
        """Vocabulary with an explicit column order."""
        return cls(terms=tuple(terms), freq=dict(freq or {}), min_freq=0)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def __iter__(self):
        return iter(self.terms)

    @property
    def fingerprint(self) -> str:
        digest = hashlib.sha256("\n".join(self.terms).encode("utf-8"))
        return digest.hexdigest()

    def require(self, fingerprint: str):
        """Raise VocabularyMismatchError unless `fingerprint` names this vocabulary."""
        if fingerprint != self.fingerprint:
            raise VocabularyMismatchError(expected=fingerprint, actual=self.fingerprint)


def build_vocabulary(sentences: Iterable[Sequence[str]], min_freq: int) -> Vocabulary:
    """Terms occurring more than `min_freq` times over all sentences."""
    counts: Counter = Counter()
    for tokens in sentences:
        counts.update(tokens)
    vocabulary = Vocabulary.from_counts(counts, min_freq)
    logger.debug(
        "Vocabulary: %d of %d distinct terms kept (min_freq=%d)",
        len(vocabulary), len(counts), min_freq,
    )
    return vocabulary


# =============================================================================
# Persistence: "term<TAB>freq" per line, column order
# =============================================================================


def format_vocabulary(vocabulary: Vocabulary, header: Optional[str] = None) -> str:
    lines = [header] if header else []
    lines.extend(f"{term}\t{vocabulary.freq.get(term, 0)}" for term in vocabulary.terms)
    return "\n".join(lines) + "\n"


def parse_vocabulary(text: str, source: str = "vocabulary") -> Vocabulary:
    terms, freq = [], {}
    for line_number, line in enumerate(text.splitlines(), 1):
        if not line or line.startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 2 or not columns[1].isdecimal():
            raise VocabularyFormatError(f"{source}:{line_number}: expected term<TAB>count")
        terms.append(columns[0])
        freq[columns[0]] = int(columns[1])
    return Vocabulary.from_terms(terms, freq)


def load_vocabulary(path: Path) -> Vocabulary:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise VocabularyFormatError(f"cannot read vocabulary {path}: {e}") from e
    return parse_vocabulary(text, str(path))
