"""
Sentence classifier: vocabulary + weighting + NB or SVM model.

A SentenceClassifier is everything needed to label unseen token lists:
the training vocabulary, the training IDF vector and the trained model.
It is fitted from token lists only, so the caller decides which rows the
vocabulary and IDF may see.
"""
import logging
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np

from apps.bayes.services import NbModel, dump_nb, load_nb, predict_nb_many, train_nb
from apps.core.exceptions import ModelFormatError
from apps.corpus.services.corpus_models import LabeledDataset
from apps.preprocess.services import (
    TextPreprocessor,
    Vocabulary,
    build_vocabulary,
    format_vocabulary,
    parse_vocabulary,
)
from apps.svm.services import Kernel, SvmModel, decision_values, dump_svm, load_svm, train_svm
from apps.vectorize.services import (
    DocTermMatrix,
    IdfVector,
    WeightingScheme,
    build_matrix,
    count_matrix,
    format_idf,
    idf,
    parse_idf,
)

logger = logging.getLogger(__name__)


class ClassifierKind(str, Enum):
    NB = "nb"
    SVM_LINEAR = "svm-linear"
    SVM_GAUSSIAN = "svm-gaussian"
    SVM_POLY = "svm-poly"


@dataclass(frozen=True)
class ClassifierSpec:
    kind: ClassifierKind = ClassifierKind.NB
    scheme: WeightingScheme = WeightingScheme.TF
    alpha: float = 1.0
    c: float = 10.0
    sigma: float = 16.0
    poly_c: float = 1.0
    poly_degree: int = 2
    tol: float = 1e-3
    max_iter: int = 100_000

    def __post_init__(self):
        object.__setattr__(self, "kind", ClassifierKind(self.kind))
        object.__setattr__(self, "scheme", WeightingScheme(self.scheme))

    @classmethod
    def from_config(cls, config, **overrides) -> "ClassifierSpec":
        """Spec from a RunConfig; `overrides` replace single fields."""
        values = {
            "kind": config.classifier,
            "scheme": config.scheme,
            "alpha": config.alpha,
            "c": config.c,
            "sigma": config.sigma,
            "poly_c": config.poly_c,
            "poly_degree": config.poly_degree,
            "tol": config.tol,
            "max_iter": config.max_iter,
        }
        values.update(overrides)
        return cls(**values)

    def with_changes(self, **changes) -> "ClassifierSpec":
        return replace(self, **changes)

    @property
    def is_svm(self) -> bool:
        return self.kind is not ClassifierKind.NB

    def kernel(self) -> Kernel:
        if self.kind is ClassifierKind.SVM_GAUSSIAN:
            return Kernel.gaussian(self.sigma)
        if self.kind is ClassifierKind.SVM_POLY:
            return Kernel.polynomial(self.poly_c, self.poly_degree)
        return Kernel.linear()

    def describe(self) -> str:
        if self.kind is ClassifierKind.NB:
            params = f"alpha={self.alpha:g}"
        elif self.kind is ClassifierKind.SVM_GAUSSIAN:
            params = f"C={self.c:g},sigma={self.sigma:g}"
        elif self.kind is ClassifierKind.SVM_POLY:
            params = f"C={self.c:g},c={self.poly_c:g},degree={self.poly_degree}"
        else:
            params = f"C={self.c:g}"
        return f"{self.kind.value}({params})/{self.scheme.value}"

    def as_line(self) -> str:
        values = ((f.name, getattr(self, f.name)) for f in fields(self))
        return " ".join(
            f"{name}={value.value if isinstance(value, Enum) else value}" for name, value in values
        )

    @classmethod
    def parse_line(cls, text: str) -> "ClassifierSpec":
        values = {}
        types = {f.name: f.type for f in fields(cls)}
        for item in text.split():
            key, _, raw = item.partition("=")
            if key not in types:
                raise ModelFormatError(f"unknown classifier field '{key}'")
            if key in ("kind", "scheme"):
                values[key] = raw
            elif key in ("poly_degree", "max_iter"):
                values[key] = int(raw)
            else:
                values[key] = float(raw)
        return cls(**values)


@dataclass(frozen=True, eq=False)
class TokenizedCorpus:
    """Preprocessed sentences with their labels, in dataset order."""

    tokens: tuple[tuple[str, ...], ...]
    labels: np.ndarray
    keys: tuple = ()

    @classmethod
    def from_dataset(cls, dataset: LabeledDataset, preprocessor: TextPreprocessor) -> "TokenizedCorpus":
        return cls(
            tokens=tuple(tuple(t) for t in preprocessor.corpus_tokens(dataset.texts)),
            labels=np.asarray(dataset.labels, dtype=np.int64),
            keys=tuple(dataset.keys),
        )

    def __len__(self) -> int:
        return len(self.tokens)

    def subset(self, indices: Sequence[int]) -> "TokenizedCorpus":
        indices = list(indices)
        return TokenizedCorpus(
            tokens=tuple(self.tokens[i] for i in indices),
            labels=self.labels[indices],
            keys=tuple(self.keys[i] for i in indices) if self.keys else (),
        )


Model = Union[NbModel, SvmModel]


@dataclass(frozen=True, eq=False)
class SentenceClassifier:
    spec: ClassifierSpec
    vocabulary: Vocabulary
    idf_vector: Optional[IdfVector]
    model: Model

    def vectorize(self, token_lists: Sequence[Sequence[str]]) -> DocTermMatrix:
        return build_matrix(token_lists, self.vocabulary, self.spec.scheme, self.idf_vector)

    def scores(self, token_lists: Sequence[Sequence[str]]) -> np.ndarray:
        """Decision values; positive (or zero) means causal."""
        matrix = self.vectorize(token_lists)
        if isinstance(self.model, SvmModel):
            return decision_values(self.model, matrix)
        difference = self.model.log_likelihood[0] - self.model.log_likelihood[1]
        prior = self.model.log_prior[0] - self.model.log_prior[1]
        return np.asarray(matrix.data @ difference).ravel() + prior

    def predict(self, token_lists: Sequence[Sequence[str]]) -> np.ndarray:
        matrix = self.vectorize(token_lists)
        if isinstance(self.model, SvmModel):
            return np.where(decision_values(self.model, matrix) >= 0, 1, -1)
        return predict_nb_many(self.model, matrix)


def fit_classifier(
    token_lists: Sequence[Sequence[str]],
    labels: Sequence[int],
    spec: ClassifierSpec,
    vocabulary: Optional[Vocabulary] = None,
    min_freq: int = 5,
    idf_vector: Optional[IdfVector] = None,
) -> SentenceClassifier:
    """Fit vocabulary and IDF (unless given) and the model on the same rows."""
    if vocabulary is None:
        vocabulary = build_vocabulary(token_lists, min_freq)
    if idf_vector is None and len(token_lists):
        idf_vector = idf(count_matrix(token_lists, vocabulary), vocabulary)
    matrix = build_matrix(token_lists, vocabulary, spec.scheme, idf_vector)
    if spec.is_svm:
        model = train_svm(matrix, labels, spec.kernel(), C=spec.c, tol=spec.tol, max_iter=spec.max_iter)
    else:
        model = train_nb(matrix, labels, alpha=spec.alpha)
    logger.debug("fitted %s on %d rows, %d terms", spec.describe(), len(token_lists), len(vocabulary))
    return SentenceClassifier(spec, vocabulary, idf_vector, model)


# =============================================================================
# Serialization: one file with spec, vocabulary, IDF and model sections
# =============================================================================

SECTION = "@@ "


def dump_classifier(classifier: SentenceClassifier, header: Optional[str] = None) -> str:
    parts = [header + "\n"] if header else []
    parts.append(f"{SECTION}classifier\n{classifier.spec.as_line()}\n")
    parts.append(f"{SECTION}vocabulary\n{format_vocabulary(classifier.vocabulary)}")
    if classifier.idf_vector is not None:
        parts.append(f"{SECTION}idf\n{format_idf(classifier.idf_vector, classifier.vocabulary)}")
    model = classifier.model
    body = dump_svm(model) if isinstance(model, SvmModel) else dump_nb(model)
    parts.append(f"{SECTION}model\n{body}")
    return "".join(parts)


def load_classifier(text: str, source: str = "model") -> SentenceClassifier:
    sections: dict[str, list[str]] = {}
    current = None
    for line in text.splitlines():
        if line.startswith(SECTION):
            current = line[len(SECTION):].strip()
            sections[current] = []
        elif current is not None:
            sections[current].append(line)
        elif line and not line.startswith("#"):
            raise ModelFormatError("content before the first section", source=source)
    for required in ("classifier", "vocabulary", "model"):
        if required not in sections:
            raise ModelFormatError(f"missing '{required}' section", source=source)

    try:
        spec = ClassifierSpec.parse_line(" ".join(sections["classifier"]))
    except ValueError as e:
        raise ModelFormatError(f"bad classifier line: {e}", source=source) from e
    vocabulary = parse_vocabulary("\n".join(sections["vocabulary"]), source=source)
    idf_vector = parse_idf("\n".join(sections["idf"]), source=source) if "idf" in sections else None
    model_text = "\n".join(sections["model"])
    model = load_svm(model_text, source) if spec.is_svm else load_nb(model_text, source)

    if model.n_terms != len(vocabulary):
        raise ModelFormatError(
            f"model has {model.n_terms} terms, vocabulary has {len(vocabulary)}", source=source,
        )
    if model.vocab_fingerprint and model.vocab_fingerprint != vocabulary.fingerprint:
        raise ModelFormatError("model was trained on a different vocabulary", source=source)
    return SentenceClassifier(spec, vocabulary, idf_vector, model)
