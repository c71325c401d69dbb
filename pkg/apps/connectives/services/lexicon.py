"""
Connective lexicon.

File format: UTF-8, one ``category<TAB>phrase`` per line, ``#`` comments.
Categories are ``transition``, ``conjunction`` and ``verb``; verbs are
reduced to their Porter stems on load ("cause" -> "caus").
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from apps.connectives.exceptions import LexiconError
from apps.preprocess.services.stemmer import stem

logger = logging.getLogger(__name__)

DEFAULT_LEXICON = Path(__file__).resolve().parent.parent / "data" / "connectives.tsv"

CATEGORIES = ("transition", "conjunction", "verb")
SHARED_PHRASES = frozenset({"so"})  # listed as both transition and conjunction


@dataclass(frozen=True)
class ConnectiveLexicon:
    transitions: frozenset[str] = frozenset()
    conjunctions: frozenset[str] = frozenset()
    verb_stems: frozenset[str] = frozenset()

    def __len__(self) -> int:
        return len(self.transitions | self.conjunctions) + len(self.verb_stems)

    @property
    def phrases(self) -> dict[str, str]:
        """Phrase -> reported category; conjunction wins for shared phrases."""
        categories = {phrase: "transition" for phrase in self.transitions}
        categories.update((phrase, "conjunction") for phrase in self.conjunctions)
        return categories

    @property
    def single_words(self) -> frozenset[str]:
        """One-word connectives, to keep out of stopword lists."""
        return frozenset(p for p in self.transitions | self.conjunctions if " " not in p)

    @classmethod
    def from_entries(
        cls, entries: Iterable[tuple[str, str]], source: str = "lexicon"
    ) -> "ConnectiveLexicon":
        found: dict[str, set[str]] = {category: set() for category in CATEGORIES}
        for line_number, (category, phrase) in enumerate(entries, 1):
            category = category.strip().lower()
            phrase = " ".join(phrase.lower().split())
            if category not in CATEGORIES:
                raise LexiconError(f"unknown category '{category}'", line_number, source)
            if not phrase:
                raise LexiconError("empty phrase", line_number, source)
            found[category].add(stem(phrase) if category == "verb" else phrase)

        for phrase in sorted((found["transition"] & found["conjunction"]) - SHARED_PHRASES):
            logger.warning("%s: '%s' listed as transition and conjunction; reporting conjunction",
                           source, phrase)
        return cls(
            transitions=frozenset(found["transition"]),
            conjunctions=frozenset(found["conjunction"]),
            verb_stems=frozenset(found["verb"]),
        )


def parse_lexicon(text: str, source: str = "lexicon") -> ConnectiveLexicon:
    entries = []
    for line_number, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 2:
            raise LexiconError("expected 'category<TAB>phrase'", line_number, source)
        category = columns[0].strip().lower()
        if category not in CATEGORIES:
            raise LexiconError(f"unknown category '{columns[0]}'", line_number, source)
        if not columns[1].strip():
            raise LexiconError("empty phrase", line_number, source)
        entries.append((category, columns[1]))
    return ConnectiveLexicon.from_entries(entries, source)


def load_lexicon(path: Optional[Path] = None) -> ConnectiveLexicon:
    path = Path(path) if path else DEFAULT_LEXICON
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise LexiconError("file not found", source=str(path)) from e
    except (OSError, UnicodeDecodeError) as e:
        raise LexiconError(f"cannot read lexicon: {e}", source=str(path)) from e
    lexicon = parse_lexicon(text, source=str(path))
    logger.debug(
        "lexicon %s: %d transitions, %d conjunctions, %d verb stems",
        path.name, len(lexicon.transitions), len(lexicon.conjunctions), len(lexicon.verb_stems),
    )
    return lexicon
