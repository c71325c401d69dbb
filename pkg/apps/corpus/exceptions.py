"""Errors raised while loading or splitting corpora."""
from typing import Optional

from apps.core.exceptions import CausalExtractError


class CorpusError(CausalExtractError):
    """Unreadable report, unsupported format or impossible split."""


class EmptyDocumentError(CorpusError):
    def __init__(self, path: str):
        super().__init__("empty document", {"path": path})
        self.path = path


class LabeledFormatError(CorpusError):
    """Malformed line in a labeled-TSV file."""

    def __init__(self, message: str, line_number: int, source: Optional[str] = None):
        location = f"{source}:{line_number}" if source else f"line {line_number}"
        super().__init__(f"{location}: {message}", {"line_number": line_number})
        self.line_number = line_number
