"""
Sparse document-term matrix.

Rows are documents (sentences), columns vocabulary terms. Storage is a
canonical CSR matrix, so iteration is row-major with ascending columns.

Dump format: optional ``#`` line, then ``n t scheme``, then one
``row col weight`` triple per stored entry, 12 significant digits.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np
from scipy import sparse

from apps.preprocess.services.vocabulary import Vocabulary
from apps.vectorize.exceptions import VectorizeError

from .weighting import IdfVector, WeightingScheme, term_counts, weigh

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DocTermMatrix:
    data: sparse.csr_matrix
    scheme: WeightingScheme
    vocab_fingerprint: Optional[str] = None

    def __post_init__(self):
        matrix = sparse.csr_matrix(self.data, dtype=np.float64)
        matrix.sum_duplicates()
        matrix.eliminate_zeros()
        matrix.sort_indices()
        if matrix.nnz and matrix.data.min() < 0:
            raise VectorizeError("document-term weights must be non-negative")
        object.__setattr__(self, "data", matrix)
        object.__setattr__(self, "scheme", WeightingScheme(self.scheme))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def entries(self) -> Iterator[tuple[int, int, float]]:
        indptr, indices, values = self.data.indptr, self.data.indices, self.data.data
        for row in range(self.rows):
            for k in range(indptr[row], indptr[row + 1]):
                yield row, int(indices[k]), float(values[k])

    def to_dense(self) -> np.ndarray:
        return self.data.toarray()


def count_matrix(token_lists: Sequence[Sequence[str]], vocab: Vocabulary) -> sparse.csr_matrix:
    """Raw counts, documents x terms."""
    rows, cols = [], []
    for row, tokens in enumerate(token_lists):
        for token in tokens:
            column = vocab.index.get(token)
            if column is not None:
                rows.append(row)
                cols.append(column)
    values = np.ones(len(rows), dtype=np.float64)
    shape = (len(token_lists), len(vocab))
    return sparse.csr_matrix((values, (rows, cols)), shape=shape)


def build_matrix(
    token_lists: Sequence[Sequence[str]],
    vocab: Vocabulary,
    scheme: WeightingScheme,
    idf_vector: Optional[IdfVector] = None,
) -> DocTermMatrix:
    """Weighted matrix of `token_lists`; tfidf needs the training IdfVector."""
    scheme = WeightingScheme(scheme)
    counts = count_matrix(token_lists, vocab)
    if scheme is WeightingScheme.COUNT:
        weighted = counts
    elif scheme is WeightingScheme.BOOLEAN:
        weighted = (counts > 0).astype(np.float64)
    else:
        row_sums = np.asarray(counts.sum(axis=1)).ravel()
        inverse = np.divide(1.0, row_sums, out=np.zeros_like(row_sums), where=row_sums > 0)
        weighted = sparse.diags(inverse) @ counts
        if scheme is WeightingScheme.TFIDF:
            if idf_vector is None:
                raise VectorizeError("tfidf weighting requires the training IDF vector")
            weighted = weighted @ sparse.diags(idf_vector.as_array(vocab))
    return DocTermMatrix(sparse.csr_matrix(weighted), scheme, vocab.fingerprint)


def dense_rows(token_lists: Sequence[Sequence[str]], vocab: Vocabulary, scheme, idf_vector=None) -> np.ndarray:
    """Row-by-row projection; equals build_matrix(...).to_dense()."""
    idf_values = idf_vector.as_array(vocab) if idf_vector is not None else None
    if len(token_lists) == 0:
        return np.zeros((0, len(vocab)))
    return np.vstack([weigh(term_counts(t, vocab), scheme, idf_values) for t in token_lists])


# =============================================================================
# Dump / load
# =============================================================================


def format_matrix(matrix: DocTermMatrix, header: Optional[str] = None) -> str:
    lines = [header] if header else []
    lines.append(f"{matrix.rows} {matrix.cols} {matrix.scheme.value}")
    lines.extend(f"{row} {col} {weight:.12g}" for row, col, weight in matrix.entries())
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, source: str = "matrix") -> DocTermMatrix:
    lines = [
        (number, line) for number, line in enumerate(text.splitlines(), 1)
        if line and not line.startswith("#")
    ]
    if not lines:
        raise VectorizeError(f"{source}: missing 'n t scheme' header")
    try:
        n_text, t_text, scheme_text = lines[0][1].split()
        shape = (int(n_text), int(t_text))
        scheme = WeightingScheme(scheme_text)
    except ValueError as e:
        raise VectorizeError(f"{source}:{lines[0][0]}: bad header: {e}") from e

    rows, cols, values = [], [], []
    for number, line in lines[1:]:
        try:
            row_text, col_text, weight_text = line.split()
            row, col, weight = int(row_text), int(col_text), float(weight_text)
        except ValueError as e:
            raise VectorizeError(f"{source}:{number}: expected 'row col weight'") from e
        if not (0 <= row < shape[0] and 0 <= col < shape[1]):
            raise VectorizeError(f"{source}:{number}: entry ({row}, {col}) outside {shape}")
        rows.append(row)
        cols.append(col)
        values.append(weight)
    data = sparse.csr_matrix((values, (rows, cols)), shape=shape)
    return DocTermMatrix(data, scheme)


def as_csr(matrix) -> sparse.csr_matrix:
    """CSR view of a DocTermMatrix, sparse matrix or dense array."""
    if isinstance(matrix, DocTermMatrix):
        return matrix.data
    if sparse.issparse(matrix):
        return sparse.csr_matrix(matrix, dtype=np.float64)
    return sparse.csr_matrix(np.atleast_2d(np.asarray(matrix, dtype=np.float64)))
