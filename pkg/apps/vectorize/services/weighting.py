"""
Term weighting: counts, boolean, TF, IDF and TF-IDF.

IDF uses the natural logarithm, idf = ln(|D| / df). Terms with df = 0
are left out of the IdfVector and weigh 0 when projected.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Sequence

import numpy as np
from scipy import sparse

from apps.preprocess.services.vocabulary import Vocabulary
from apps.vectorize.exceptions import VectorizeError


class WeightingScheme(str, Enum):
    BOOLEAN = "boolean"
    TF = "tf"
    TFIDF = "tfidf"
    COUNT = "count"  # raw occurrence counts


@dataclass(frozen=True)
class IdfVector:
    values: Mapping[str, float] = field(default_factory=dict)
    n_docs: int = 0

    def as_array(self, vocab: Vocabulary) -> np.ndarray:
        return np.array([self.values.get(term, 0.0) for term in vocab.terms], dtype=np.float64)


def term_counts(tokens: Sequence[str], vocab: Vocabulary) -> np.ndarray:
    """Occurrences of each vocabulary term; out-of-vocabulary tokens ignored."""
    counts = np.zeros(len(vocab), dtype=np.int64)
    for token in tokens:
        column = vocab.index.get(token)
        if column is not None:
            counts[column] += 1
    return counts


def boolean_weights(counts: np.ndarray) -> np.ndarray:
    return (np.asarray(counts) > 0).astype(np.float64)


def tf_weights(counts: np.ndarray) -> np.ndarray:
    counts = np.asarray(counts, dtype=np.float64)
    total = counts.sum()
    if total == 0:
        return np.zeros_like(counts)
    return counts / total


def idf(counts, vocab: Vocabulary) -> IdfVector:
    """IDF of every vocabulary term from a documents x terms count matrix."""
    matrix = sparse.csr_matrix(counts)
    n_docs = matrix.shape[0]
    if n_docs < 1:
        raise VectorizeError("idf needs at least one document")
    if matrix.shape[1] != len(vocab):
        raise VectorizeError(
            f"count matrix has {matrix.shape[1]} columns, vocabulary has {len(vocab)} terms"
        )
    document_frequency = np.asarray((matrix > 0).sum(axis=0)).ravel()
    values = {
        term: math.log(n_docs / int(df))
        for term, df in zip(vocab.terms, document_frequency)
        if df > 0
    }
    return IdfVector(values=values, n_docs=n_docs)


def tfidf_weights(tf: np.ndarray, idf_values: np.ndarray) -> np.ndarray:
    return np.asarray(tf, dtype=np.float64) * np.asarray(idf_values, dtype=np.float64)


def weigh(counts: np.ndarray, scheme: WeightingScheme, idf_values: Optional[np.ndarray] = None) -> np.ndarray:
    scheme = WeightingScheme(scheme)
    if scheme is WeightingScheme.COUNT:
        return np.asarray(counts, dtype=np.float64)
    if scheme is WeightingScheme.BOOLEAN:
        return boolean_weights(counts)
    if scheme is WeightingScheme.TF:
        return tf_weights(counts)
    if idf_values is None:
        raise VectorizeError("tfidf weighting requires the training IDF vector")
    return tfidf_weights(tf_weights(counts), idf_values)


def project(
    tokens: Sequence[str],
    vocab: Vocabulary,
    scheme: WeightingScheme,
    idf_vector: Optional[IdfVector] = None,
) -> np.ndarray:
    """Weight vector of one token list over a fixed training vocabulary."""
    if WeightingScheme(scheme) is WeightingScheme.TFIDF and idf_vector is None:
        raise VectorizeError("tfidf projection requires the training IDF vector")
    idf_values = idf_vector.as_array(vocab) if idf_vector is not None else None
    return weigh(term_counts(tokens, vocab), scheme, idf_values)


# =============================================================================
# IDF persistence: "term<TAB>idf" per line, 17 significant digits
# =============================================================================


def format_idf(idf_vector: IdfVector, vocab: Vocabulary, header: Optional[str] = None) -> str:
    lines = [header] if header else []
    lines.append(f"n_docs\t{idf_vector.n_docs}")
    for term in vocab.terms:
        if term in idf_vector.values:
            lines.append(f"{term}\t{idf_vector.values[term]:.17g}")
    return "\n".join(lines) + "\n"


def parse_idf(text: str, source: str = "idf") -> IdfVector:
    values: dict[str, float] = {}
    n_docs = None
    for line_number, line in enumerate(text.splitlines(), 1):
        if not line or line.startswith("#"):
            continue
        columns = line.split("\t")
        try:
            if len(columns) != 2:
                raise ValueError("expected 2 columns")
            if n_docs is None:
                if columns[0] != "n_docs":
                    raise ValueError("first line must be n_docs")
                n_docs = int(columns[1])
            else:
                values[columns[0]] = float(columns[1])
        except ValueError as e:
            raise VectorizeError(f"{source}:{line_number}: {e}") from e
    if n_docs is None:
        raise VectorizeError(f"{source}: missing n_docs line")
    return IdfVector(values=values, n_docs=n_docs)
