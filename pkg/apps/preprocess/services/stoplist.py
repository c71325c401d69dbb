"""
Stopword lists.

Connective words must survive stopword removal, so StopList.load drops
every word the caller protects, and every word whose Porter stem is a
protected stem (e.g. "caused" for the verb stem "caus").
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from apps.preprocess.exceptions import StopListError

from .stemmer import stem

logger = logging.getLogger(__name__)

DEFAULT_STOPLIST = Path(__file__).resolve().parent.parent / "data" / "stoplist.txt"


@dataclass(frozen=True)
class StopList:
    words: frozenset[str]

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_words(
        cls,
        words: Iterable[str],
        protected_words: Iterable[str] = (),
        protected_stems: Iterable[str] = (),
    ) -> "StopList":
        protected = {w.lower() for w in protected_words}
        stems = set(protected_stems)
        kept = set()
        for word in words:
            word = word.strip().lower()
            if not word or word in protected:
                continue
            if stems and stem(word) in stems:
                continue
            kept.add(word)
        return cls(words=frozenset(kept))

    @classmethod
    def load(
        cls,
        path: Optional[Path] = None,
        protected_words: Iterable[str] = (),
        protected_stems: Iterable[str] = (),
    ) -> "StopList":
        path = Path(path) if path else DEFAULT_STOPLIST
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError as e:
            raise StopListError(f"stoplist not found: {path}", {"path": str(path)}) from e
        except (OSError, UnicodeDecodeError) as e:
            raise StopListError(f"cannot read stoplist {path}: {e}", {"path": str(path)}) from e
        entries = [line.split("#", 1)[0] for line in text.splitlines()]
        stoplist = cls.from_words(entries, protected_words, protected_stems)
        logger.debug("Loaded stoplist %s with %d words", path.name, stoplist.size)
        return stoplist


def remove_stopwords(tokens: Iterable[str], stops: StopList) -> list[str]:
    return [token for token in tokens if token not in stops]
