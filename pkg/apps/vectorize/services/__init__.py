# Document-term matrices and term weighting.
from .matrix import (
    DocTermMatrix,
    as_csr,
    build_matrix,
    count_matrix,
    dense_rows,
    format_matrix,
    parse_matrix,
)
from .weighting import (
    IdfVector,
    WeightingScheme,
    boolean_weights,
    format_idf,
    idf,
    parse_idf,
    project,
    term_counts,
    tf_weights,
    tfidf_weights,
    weigh,
)

__all__ = [
    "DocTermMatrix",
    "IdfVector",
    "WeightingScheme",
    "as_csr",
    "boolean_weights",
    "build_matrix",
    "count_matrix",
    "dense_rows",
    "format_idf",
    "format_matrix",
    "idf",
    "parse_idf",
    "parse_matrix",
    "project",
    "term_counts",
    "tf_weights",
    "tfidf_weights",
    "weigh",
]
