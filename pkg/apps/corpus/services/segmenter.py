"""
Sentence segmentation.

Splits on '.', '!' or '?' (optionally followed by closing quotes or
brackets) when whitespace or the end of text follows, and on blank lines.
Known abbreviations and decimal numbers never split. Whitespace inside a
segment is collapsed to single spaces so sentences fit on one TSV line.
"""
import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

from apps.corpus.exceptions import CorpusError

logger = logging.getLogger(__name__)

DEFAULT_ABBREVIATIONS = Path(__file__).resolve().parent.parent / "data" / "abbreviations.txt"

_TERMINATOR = re.compile(r"[.!?]+[\"'”’)\]]*(?=\s|$)")
_BLANK_LINE = re.compile(r"\n[ \t]*\n")
_LEADING_PUNCT = re.compile(r"^[^\w]+")


def read_abbreviations(path: Path) -> frozenset[str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CorpusError(f"cannot read abbreviations {path}: {e}", {"path": str(path)}) from e
    entries = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            entries.add(line)
    return frozenset(entries)


class SentenceSegmenter:
    """Terminator + abbreviation heuristic."""

    def __init__(self, abbreviations: Iterable[str] = ()):
        self.abbreviations = frozenset(a.lower() for a in abbreviations)

    @classmethod
    def from_file(cls, path: Optional[Path] = None) -> "SentenceSegmenter":
        return cls(read_abbreviations(path or DEFAULT_ABBREVIATIONS))

    def segment(self, text: str) -> list[str]:
        segments = []
        for block in _BLANK_LINE.split(text):
            start = 0
            for match in _TERMINATOR.finditer(block):
                if self._ends_with_abbreviation(block, match):
                    continue
                segments.append(block[start:match.end()])
                start = match.end()
            segments.append(block[start:])
        return [" ".join(s.split()) for s in segments if s.strip()]

    def _ends_with_abbreviation(self, block: str, match: re.Match) -> bool:
        if match.group() != ".":
            return False
        words = block[:match.end()].split()
        if not words:
            return False
        word = _LEADING_PUNCT.sub("", words[-1]).lower()
        return word in self.abbreviations


@lru_cache(maxsize=1)
def default_segmenter() -> SentenceSegmenter:
    return SentenceSegmenter.from_file()


def segment_sentences(text: str, segmenter: Optional[SentenceSegmenter] = None) -> list[str]:
    """Trimmed, non-empty sentence strings of `text`."""
    return (segmenter or default_segmenter()).segment(text)
