"""
Porter stemming.

Uses nltk's PorterStemmer in MARTIN_EXTENSIONS mode, which reproduces the
reference vocabulary/output lists published with the algorithm.
"""
from functools import lru_cache

from nltk.stem.porter import PorterStemmer


@lru_cache(maxsize=1)
def _porter() -> PorterStemmer:
    return PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)


@lru_cache(maxsize=65536)
def stem(token: str) -> str:
    """Porter stem of a lowercase alphabetic token; anything else is returned unchanged."""
    if not token.isalpha():
        return token
    return _porter().stem(token)


def stem_all(tokens: list[str]) -> list[str]:
    return [stem(token) for token in tokens]
