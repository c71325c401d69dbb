"""Tests for bag-of-words counts, weighting schemes and matrix dumps."""
import math

import numpy as np
import pytest

from apps.preprocess.services import Vocabulary, tokenize
from apps.vectorize.exceptions import VectorizeError
from apps.vectorize.services import (
    WeightingScheme,
    boolean_weights,
    build_matrix,
    count_matrix,
    dense_rows,
    format_idf,
    format_matrix,
    idf,
    parse_idf,
    parse_matrix,
    project,
    term_counts,
    tf_weights,
    tfidf_weights,
)

BOW_DICTIONARY = Vocabulary.from_terms(
    ["john", "likes", "to", "watch", "movies", "also", "football", "games", "mary", "too"]
)

KING_DOCUMENTS = [
    "The King University College",
    "King College Site Contents",
    "University of King College",
    "King County Bar Association",
    "King County Government Seattle Washington",
    "Martin Luther King",
]
KING_TERMS = Vocabulary.from_terms([
    "the", "king", "university", "college", "site", "contents", "of", "county", "bar",
    "association", "government", "seattle", "washington", "martin", "luther",
])
KING_TDM = [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
]


def _king_tokens():
    return [tokenize(doc) for doc in KING_DOCUMENTS]


class TestBagOfWords:
    def test_first_sentence(self):
        tokens = tokenize("John likes to watch movies. Mary likes too.")
        assert term_counts(tokens, BOW_DICTIONARY).tolist() == [1, 2, 1, 1, 1, 0, 0, 0, 1, 1]

    def test_second_sentence(self):
        tokens = tokenize("John also likes to watch football games.")
        assert term_counts(tokens, BOW_DICTIONARY).tolist() == [1, 1, 1, 1, 0, 1, 1, 1, 0, 0]

    def test_out_of_vocabulary(self):
        assert term_counts(["nothing", "here"], BOW_DICTIONARY).tolist() == [0] * 10


class TestWeights:
    def test_boolean(self):
        assert boolean_weights(np.array([0, 3, 1])).tolist() == [0, 1, 1]
        assert boolean_weights(np.zeros(4)).tolist() == [0, 0, 0, 0]

    def test_king_tdm_bit_exact(self):
        matrix = build_matrix(_king_tokens(), KING_TERMS, WeightingScheme.BOOLEAN)
        assert matrix.to_dense().astype(int).tolist() == KING_TDM

    def test_tf(self):
        assert tf_weights(np.array([1, 2, 1])).tolist() == [0.25, 0.5, 0.25]
        assert tf_weights(np.array([0, 0])).tolist() == [0.0, 0.0]

    def test_tf_of_bow_vector(self):
        counts = np.array([1, 2, 1, 1, 1, 0, 0, 0, 1, 1])
        np.testing.assert_allclose(tf_weights(counts), counts / 8)

    def test_tf_rows_sum_to_one(self):
        matrix = build_matrix(_king_tokens() + [[]], KING_TERMS, WeightingScheme.TF)
        sums = np.asarray(matrix.data.sum(axis=1)).ravel()
        np.testing.assert_allclose(sums[:-1], 1.0, atol=1e-12)
        assert sums[-1] == 0

    def test_idf_values(self):
        vector = idf(count_matrix(_king_tokens(), KING_TERMS), KING_TERMS)
        assert vector.n_docs == 6
        assert vector.values["king"] == 0.0
        assert vector.values["martin"] == pytest.approx(math.log(6), abs=1e-12)
        assert vector.values["martin"] == pytest.approx(1.7918, abs=1e-4)

    def test_idf_single_document(self):
        vocab = Vocabulary.from_terms(["a"])
        assert idf(count_matrix([["a"]], vocab), vocab).values["a"] == 0.0

    def test_idf_excludes_unseen_terms(self):
        vocab = Vocabulary.from_terms(["a", "b"])
        vector = idf(count_matrix([["a"], ["a"]], vocab), vocab)
        assert "b" not in vector.values
        assert vector.as_array(vocab).tolist() == [0.0, 0.0]

    def test_idf_decreases_with_document_frequency(self):
        vocab = Vocabulary.from_terms(["a", "b", "c"])
        docs = [["a", "b", "c"], ["b", "c"], ["c"], ["c"]]
        values = idf(count_matrix(docs, vocab), vocab).as_array(vocab)
        assert values[0] > values[1] > values[2] == 0.0

    def test_tfidf(self):
        assert tfidf_weights(np.array([0.5]), np.array([math.log(6)]))[0] == pytest.approx(
            0.8959, abs=1e-4
        )
        assert tfidf_weights(np.array([0.0, 0.3]), np.array([2.0, 0.0])).tolist() == [0.0, 0.0]

    def test_tfidf_nulls_terms_in_every_document(self):
        docs = _king_tokens()
        vector = idf(count_matrix(docs, KING_TERMS), KING_TERMS)
        matrix = build_matrix(docs, KING_TERMS, WeightingScheme.TFIDF, vector)
        king = KING_TERMS.index["king"]
        assert all(value == 0.0 for value in matrix.to_dense()[:, king])
        assert project(["king", "king", "martin"], KING_TERMS, "tfidf", vector)[king] == 0.0


class TestProject:
    VOCAB = Vocabulary.from_terms(["a", "b"])

    def test_oov_ignored(self):
        assert project(["a", "c", "a"], self.VOCAB, WeightingScheme.TF).tolist() == [1.0, 0.0]

    def test_empty_tokens(self):
        assert project([], self.VOCAB, WeightingScheme.TF).tolist() == [0.0, 0.0]

    def test_boolean(self):
        assert project(["a", "c", "a"], self.VOCAB, WeightingScheme.BOOLEAN).tolist() == [1, 0]

    def test_tfidf_without_idf(self):
        with pytest.raises(VectorizeError):
            project(["a"], self.VOCAB, WeightingScheme.TFIDF)

    def test_rows_match_matrix(self):
        docs = _king_tokens()
        vector = idf(count_matrix(docs, KING_TERMS), KING_TERMS)
        for scheme in WeightingScheme:
            dense = build_matrix(docs, KING_TERMS, scheme, vector).to_dense()
            np.testing.assert_allclose(dense_rows(docs, KING_TERMS, scheme, vector), dense)


class TestDump:
    def test_header_and_order(self):
        matrix = build_matrix([["b", "a"], [], ["b"]], TestProject.VOCAB, WeightingScheme.TF)
        lines = format_matrix(matrix, header="# run").splitlines()
        assert lines == ["# run", "3 2 tf", "0 0 0.5", "0 1 0.5", "2 1 1"]

    def test_reload(self):
        docs = _king_tokens()
        matrix = build_matrix(docs, KING_TERMS, WeightingScheme.TF)
        reloaded = parse_matrix(format_matrix(matrix))
        assert reloaded.scheme is WeightingScheme.TF
        np.testing.assert_allclose(reloaded.to_dense(), matrix.to_dense(), rtol=1e-11)

    def test_bad_entry(self):
        with pytest.raises(VectorizeError, match="outside"):
            parse_matrix("1 1 tf\n0 3 0.5\n")

    def test_idf_file(self):
        docs = _king_tokens()
        vector = idf(count_matrix(docs, KING_TERMS), KING_TERMS)
        assert parse_idf(format_idf(vector, KING_TERMS)) == vector
