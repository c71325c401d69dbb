# Connective lexicon and rule-based causal sentence extraction.
from .lexicon import DEFAULT_LEXICON, ConnectiveLexicon, load_lexicon, parse_lexicon
from .matcher import (
    CausalMatch,
    ConnectiveMatcher,
    MatchCategory,
    extract_causal,
    get_matcher,
    match_sentence,
)

__all__ = [
    "DEFAULT_LEXICON",
    "CausalMatch",
    "ConnectiveLexicon",
    "ConnectiveMatcher",
    "MatchCategory",
    "extract_causal",
    "get_matcher",
    "load_lexicon",
    "match_sentence",
    "parse_lexicon",
]
