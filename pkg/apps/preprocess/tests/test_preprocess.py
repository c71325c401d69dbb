"""Tests for tokenization, stopwords, stemming, vocabulary and Zipf tables."""
import random
from collections import Counter
from pathlib import Path

import pytest

from apps.corpus.services import generate_synthetic_corpus
from apps.preprocess.exceptions import StopListError, VocabularyMismatchError
from apps.preprocess.services import (
    StopList,
    TextPreprocessor,
    TokenizeMode,
    Vocabulary,
    build_vocabulary,
    format_vocabulary,
    parse_vocabulary,
    rank_frequency,
    remove_stopwords,
    stem,
    tokenize,
    zipf_spread,
)

PORTER_VECTORS = Path(__file__).with_name("porter_vectors.tsv")

# Stems that step 1a or step 5a shorten again: a final single "s", or "agre" losing its "e".
RESTEMMED = {
    "abas": "aba",
    "agre": "agr",
    "becaus": "becau",
    "callous": "callou",
    "caus": "cau",
    "ceas": "cea",
    "collis": "colli",
    "decis": "deci",
    "defens": "defen",
}


def _porter_pairs():
    pairs = []
    for line in PORTER_VECTORS.read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            word, expected = line.split("\t")
            pairs.append((word, expected))
    return pairs


class TestTokenize:
    TEXT = "Hello world.  This is a test."

    def test_whitespace_mode_keeps_punctuation(self):
        assert tokenize(self.TEXT, TokenizeMode.WHITESPACE) == [
            "Hello", "world.", "This", "is", "a", "test.",
        ]

    def test_standard_mode(self):
        assert tokenize(self.TEXT, TokenizeMode.STANDARD) == [
            "hello", "world", "this", "is", "a", "test",
        ]

    def test_empty(self):
        assert tokenize("", "standard") == []

    def test_numbers_and_bare_punctuation_dropped(self):
        assert tokenize("At 0400, on 12/03/2004 -- 3.5 nm (approx) ahead!") == [
            "at", "on", "nm", "approx", "ahead",
        ]

    def test_inner_punctuation_kept(self):
        assert tokenize("The vessel's close-quarters situation") == [
            "the", "vessel's", "close-quarters", "situation",
        ]

    def test_tokens_have_no_whitespace(self):
        for token in tokenize("a\tb\nc  d"):
            assert token and not any(ch.isspace() for ch in token)


class TestStopList:
    def test_remove_stopwords(self):
        stops = StopList.from_words(["the", "did", "not"])
        tokens = ["the", "master", "did", "not", "activate"]
        assert remove_stopwords(tokens, stops) == ["master", "activate"]

    def test_empty_and_all_stopwords(self):
        stops = StopList.from_words(["a", "b"])
        assert remove_stopwords([], stops) == []
        assert remove_stopwords(["a", "b", "a"], stops) == []

    def test_case_insensitive(self):
        stops = StopList.from_words(["The"])
        assert "THE" in stops
        assert remove_stopwords(["The", "hull"], stops) == ["hull"]

    def test_shipped_list_protects_connectives(self):
        stops = StopList.load(
            protected_words=["as", "since", "so", "because", "therefore", "thus"],
            protected_stems=["caus", "result"],
        )
        for word in ("as", "since", "so", "because", "therefore", "thus", "results"):
            assert word not in stops
        assert "the" in stops
        assert all(ch in stops for ch in "abcdefghijklmnopqrstuvwxyz")
        assert stops.size > 400

    def test_unprotected_shipped_list_contains_connectives(self):
        stops = StopList.load()
        assert "because" in stops
        assert "results" in stops

    def test_missing_file(self, tmp_path):
        with pytest.raises(StopListError):
            StopList.load(tmp_path / "nope.txt")


class TestStem:
    def test_short_sentence(self):
        words = "stemming can be fun and exciting".split()
        assert " ".join(stem(w) for w in words) == "stem can be fun and excit"

    def test_canonical_over_illustrative(self):
        assert stem("agreed") == "agre"
        assert stem("engineering") == "engin"
        assert stem("stop") == "stop"

    def test_reference_vectors(self):
        pairs = _porter_pairs()
        assert len(pairs) >= 100
        mismatches = [(w, e, stem(w)) for w, e in pairs if stem(w) != e]
        assert mismatches == []

    def test_non_alphabetic_unchanged(self):
        assert stem("b-52") == "b-52"
        assert stem("vessel's") == "vessel's"

    def test_idempotent_on_outputs(self):
        words = {w for w, _ in _porter_pairs()}
        for item in generate_synthetic_corpus(200, seed=7):
            words.update(tokenize(item.sentence.text))
        restemmed = {}
        for word in sorted(words):
            once = stem(word)
            twice = stem(once)
            if twice != once:
                restemmed[once] = twice
            assert stem(twice) == twice
        assert restemmed == RESTEMMED


class TestVocabulary:
    def test_min_freq_boundary(self):
        sentences = [["engin"]] * 6 + [["hull"]] * 5
        vocab = build_vocabulary(sentences, min_freq=5)
        assert vocab.terms == ("engin",)
        assert vocab.freq["engin"] == 6

    def test_min_freq_zero_keeps_all(self):
        vocab = build_vocabulary([["b", "a"], ["c"]], min_freq=0)
        assert vocab.terms == ("a", "b", "c")
        assert vocab.index == {"a": 0, "b": 1, "c": 2}

    def test_order_independent(self):
        sentences = [["x", "y"], ["y", "z", "z"], ["x"], ["z", "w"]] * 3
        shuffled = sentences[:]
        random.Random(7).shuffle(shuffled)
        assert build_vocabulary(sentences, 1) == build_vocabulary(shuffled, 1)

    def test_empty_input(self):
        assert len(build_vocabulary([], 5)) == 0

    def test_fingerprint_tracks_terms(self):
        a = Vocabulary.from_terms(["a", "b"])
        assert a.fingerprint == Vocabulary.from_terms(["a", "b"]).fingerprint
        assert a.fingerprint != Vocabulary.from_terms(["b", "a"]).fingerprint
        with pytest.raises(VocabularyMismatchError, match="vocabulary mismatch"):
            a.require(Vocabulary.from_terms(["a", "c"]).fingerprint)

    def test_file_format_keeps_order(self):
        vocab = build_vocabulary([["b", "a", "a"]], 0)
        reloaded = parse_vocabulary(format_vocabulary(vocab, header="# prov"))
        assert reloaded.terms == vocab.terms
        assert reloaded.freq == {"a": 2, "b": 1}
        assert reloaded.fingerprint == vocab.fingerprint


class TestTextPreprocessor:
    def test_progression_is_monotone(self):
        stops = StopList.load()
        texts = [
            "The master did not activate the general alarm.",
            "The crew had limited warning of the alarm.",
            "The alarm was not activated by the master.",
        ] * 3
        vocab, processed, stats = TextPreprocessor(stops).fit_vocabulary(texts, min_freq=2)
        assert stats.raw_tokens >= stats.after_stopwords >= stats.vocabulary_size
        assert "alarm" in vocab
        assert "activ" in vocab
        assert processed[0] == ["master", "activ", "gener", "alarm"]


class TestZipf:
    def test_rank_frequency_order(self):
        table = rank_frequency({"b": 3, "a": 3, "c": 5})
        assert [(r.rank, r.term, r.freq, r.product) for r in table] == [
            (1, "c", 5, 5), (2, "a", 3, 6), (3, "b", 3, 9),
        ]

    def test_zipfian_counts_have_small_spread(self):
        counts = Counter({f"t{r}": 10_000 // r for r in range(1, 201)})
        spread = zipf_spread(rank_frequency(counts))
        assert spread is not None and spread < 10

    def test_short_table(self):
        assert zipf_spread(rank_frequency({"a": 1})) is None
