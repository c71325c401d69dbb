"""
Multinomial naive Bayes over bag-of-words weight vectors.

Scores are unnormalized log posteriors, log P(y) + sum_j x_j log P(term_j | y).
The evidence term is the same for both classes and is left out.
Fractional (TF/TF-IDF) weights act as soft counts.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from apps.bayes.exceptions import NaiveBayesError
from apps.core.exceptions import ModelFormatError
from apps.vectorize.services.matrix import as_csr

logger = logging.getLogger(__name__)

CLASSES = (1, -1)  # row order of log_prior / log_likelihood
FORMAT_VERSION = 1


@dataclass(frozen=True, eq=False)
class NbModel:
    log_prior: np.ndarray  # shape (2,)
    log_likelihood: np.ndarray  # shape (2, t)
    alpha: float = 1.0
    vocab_fingerprint: Optional[str] = None

    @property
    def classes(self) -> tuple[int, int]:
        return CLASSES

    @property
    def n_terms(self) -> int:
        return self.log_likelihood.shape[1]

    def prior(self, label: int) -> float:
        return float(self.log_prior[CLASSES.index(label)])

    def likelihood(self, label: int, column: int) -> float:
        return float(self.log_likelihood[CLASSES.index(label), column])


def _label_array(labels: Sequence[int], n_rows: int) -> np.ndarray:
    y = np.asarray(list(labels), dtype=np.int64)
    if y.shape != (n_rows,):
        raise NaiveBayesError(f"{n_rows} matrix rows but {y.size} labels")
    if not np.isin(y, CLASSES).all():
        raise NaiveBayesError("labels must be +1 or -1")
    return y


def train_nb(matrix, labels: Sequence[int], alpha: float = 1.0,
             vocab_fingerprint: Optional[str] = None) -> NbModel:
    """Fit class priors and Laplace-smoothed term likelihoods."""
    if not alpha > 0:
        raise NaiveBayesError(f"alpha must be > 0, got {alpha}")
    X = as_csr(matrix)
    if vocab_fingerprint is None:
        vocab_fingerprint = getattr(matrix, "vocab_fingerprint", None)
    y = _label_array(labels, X.shape[0])
    n_terms = X.shape[1]

    counts = np.array([(y == label).sum() for label in CLASSES], dtype=np.float64)
    if (counts == 0).any():
        raise NaiveBayesError("degenerate training labels", {"class_counts": counts.tolist()})

    log_prior = np.log(counts / counts.sum())
    log_likelihood = np.empty((2, n_terms), dtype=np.float64)
    for row, label in enumerate(CLASSES):
        term_weight = np.asarray(X[y == label].sum(axis=0)).ravel()
        log_likelihood[row] = np.log(term_weight + alpha) - np.log(term_weight.sum() + alpha * n_terms)

    logger.debug(
        "naive bayes: %d rows (%d/%d), %d terms, alpha=%g",
        X.shape[0], int(counts[0]), int(counts[1]), n_terms, alpha,
    )
    return NbModel(log_prior, log_likelihood, float(alpha), vocab_fingerprint)


def _check_width(model: NbModel, width: int):
    if width != model.n_terms:
        raise NaiveBayesError(f"vector has {width} entries, model has {model.n_terms} terms")


def log_posterior(model: NbModel, x) -> dict[int, float]:
    x = np.asarray(x, dtype=np.float64).ravel()
    _check_width(model, x.size)
    scores = model.log_prior + model.log_likelihood @ x
    return {label: float(score) for label, score in zip(CLASSES, scores)}


def predict_nb(model: NbModel, x) -> int:
    """Argmax of the log posterior; a tie goes to +1."""
    scores = log_posterior(model, x)
    return 1 if scores[1] >= scores[-1] else -1


def predict_nb_many(model: NbModel, matrix) -> np.ndarray:
    X = as_csr(matrix)
    _check_width(model, X.shape[1])
    scores = np.asarray(X @ model.log_likelihood.T) + model.log_prior
    return np.where(scores[:, 0] >= scores[:, 1], 1, -1)


# =============================================================================
# Serialization
# =============================================================================


def dump_nb(model: NbModel, header: Optional[str] = None) -> str:
    """
    Versioned flat text:

        nb 1
        alpha <a>
        terms <t>
        fingerprint <sha256 or ->
        prior +1 <log p>
        prior -1 <log p>
        +1 <t log-likelihoods, tab separated>
        -1 <...>
    """
    lines = [header] if header else []
    lines += [
        f"nb {FORMAT_VERSION}",
        f"alpha {model.alpha:.17g}",
        f"terms {model.n_terms}",
        f"fingerprint {model.vocab_fingerprint or '-'}",
    ]
    for row, label in enumerate(CLASSES):
        lines.append(f"prior {label:+d} {model.log_prior[row]:.17g}")
    for row, label in enumerate(CLASSES):
        values = "\t".join(f"{v:.17g}" for v in model.log_likelihood[row])
        lines.append(f"{label:+d}\t{values}" if values else f"{label:+d}")
    return "\n".join(lines) + "\n"


def load_nb(text: str, source: str = "model") -> NbModel:
    lines = [
        (number, line) for number, line in enumerate(text.splitlines(), 1)
        if line and not line.startswith("#")
    ]
    if len(lines) != 8:
        raise ModelFormatError(f"expected 8 lines, found {len(lines)}", source=source)

    def field(index: int, key: str) -> str:
        number, line = lines[index]
        parts = line.split(" ", 1)
        if parts[0] != key or len(parts) != 2:
            raise ModelFormatError(f"expected '{key} ...'", number, source)
        return parts[1]

    try:
        if field(0, "nb") != str(FORMAT_VERSION):
            raise ModelFormatError("unsupported naive bayes format version", lines[0][0], source)
        alpha = float(field(1, "alpha"))
        n_terms = int(field(2, "terms"))
        fingerprint = field(3, "fingerprint")
        log_prior = np.empty(2)
        log_likelihood = np.empty((2, n_terms))
        for row, label in enumerate(CLASSES):
            label_text, value = field(4 + row, "prior").split()
            if int(label_text) != label:
                raise ModelFormatError(f"expected prior for {label:+d}", lines[4 + row][0], source)
            log_prior[row] = float(value)
            number, line = lines[6 + row]
            columns = line.split("\t")
            if int(columns[0]) != label or len(columns) != n_terms + 1:
                raise ModelFormatError(
                    f"expected {label:+d} followed by {n_terms} values", number, source,
                )
            log_likelihood[row] = [float(v) for v in columns[1:]]
    except ValueError as e:
        raise ModelFormatError(f"bad number: {e}", source=source) from e

    return NbModel(log_prior, log_likelihood, alpha, None if fingerprint == "-" else fingerprint)
