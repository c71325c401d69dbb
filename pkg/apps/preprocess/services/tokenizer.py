"""Whitespace tokenization in two modes."""
import re
from enum import Enum

# A token is a non-empty string without whitespace.
Token = str

_EDGE_PUNCT = re.compile(r"^[\W_]+|[\W_]+$")
_NUMBER = re.compile(r"\d+(?:[.,:/\-]\d+)*")


class TokenizeMode(str, Enum):
    STANDARD = "standard"      # lowercase, edge punctuation stripped, numbers dropped
    WHITESPACE = "whitespace"  # split only, surface kept


def tokenize(text: str, mode: TokenizeMode = TokenizeMode.STANDARD) -> list[Token]:
    raw = text.split()
    if TokenizeMode(mode) is TokenizeMode.WHITESPACE:
        return raw
    tokens = []
    for piece in raw:
        token = _EDGE_PUNCT.sub("", piece).lower()
        if token and not _NUMBER.fullmatch(token):
            tokens.append(token)
    return tokens
