# Tokenization, stopwords, stemming, vocabulary and Zipf diagnostics.
from .stemmer import stem
from .stoplist import StopList, remove_stopwords
from .text_preprocessor import PreprocessStats, TextPreprocessor
from .tokenizer import Token, TokenizeMode, tokenize
from .vocabulary import (
    Vocabulary,
    build_vocabulary,
    format_vocabulary,
    load_vocabulary,
    parse_vocabulary,
)
from .zipf import ZipfRow, rank_frequency, zipf_spread

__all__ = [
    "PreprocessStats",
    "StopList",
    "TextPreprocessor",
    "Token",
    "TokenizeMode",
    "Vocabulary",
    "ZipfRow",
    "build_vocabulary",
    "format_vocabulary",
    "load_vocabulary",
    "parse_vocabulary",
    "rank_frequency",
    "remove_stopwords",
    "stem",
    "tokenize",
    "zipf_spread",
]
