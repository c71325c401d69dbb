from typing import Optional

from apps.core.exceptions import CausalExtractError


class LexiconError(CausalExtractError):
    """Missing or malformed connective lexicon file."""

    def __init__(self, message: str, line_number: Optional[int] = None, source: str = "lexicon"):
        location = f"{source}:{line_number}" if line_number else source
        super().__init__(f"{location}: {message}", {"line_number": line_number})
        self.line_number = line_number
