"""Errors raised by tokenization, stoplists and vocabularies."""
from apps.core.exceptions import CausalExtractError


class StopListError(CausalExtractError):
    """Stoplist file missing or unreadable."""


class VocabularyMismatchError(CausalExtractError):
    """Artifacts built against different vocabularies were combined."""

    def __init__(self, expected: str, actual: str):
        super().__init__(
            "vocabulary mismatch",
            {"expected": expected, "actual": actual},
        )
        self.expected = expected
        self.actual = actual


class VocabularyFormatError(CausalExtractError):
    """Malformed vocabulary file."""
