"""Trained SVM model, decision function and text serialization."""
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import sparse

from apps.core.exceptions import ModelFormatError
from apps.svm.exceptions import KernelError
from apps.vectorize.services.matrix import as_csr

from .kernels import Kernel, gram_matrix

FORMAT_VERSION = 1


@dataclass(frozen=True, eq=False)
class SvmModel:
    support_vectors: sparse.csr_matrix
    sv_labels: np.ndarray
    alphas: np.ndarray
    bias: float
    kernel: Kernel
    C: float
    vocab_fingerprint: Optional[str] = None
    support_indices: Optional[np.ndarray] = None  # rows of the training matrix; not persisted
    iterations: int = 0

    @property
    def n_support(self) -> int:
        return self.support_vectors.shape[0]

    @property
    def n_terms(self) -> int:
        return self.support_vectors.shape[1]

    @property
    def coefficients(self) -> np.ndarray:
        return self.alphas * self.sv_labels


def decision_values(model: SvmModel, matrix) -> np.ndarray:
    """f(x) = sum_i alpha_i y_i K(sv_i, x) + b for every row of `matrix`."""
    X = as_csr(matrix)
    if X.shape[1] != model.n_terms:
        raise KernelError(f"dimension mismatch: {X.shape[1]} vs {model.n_terms}")
    if model.n_support == 0:
        return np.full(X.shape[0], model.bias)
    return model.coefficients @ gram_matrix(model.kernel, model.support_vectors, X) + model.bias


def decision_value(model: SvmModel, x) -> float:
    return float(decision_values(model, np.asarray(x, dtype=np.float64).reshape(1, -1))[0])


def predict_svm(model: SvmModel, x) -> int:
    # sgn with +1 at exactly zero
    return 1 if decision_value(model, x) >= 0 else -1


def predict_svm_many(model: SvmModel, matrix) -> np.ndarray:
    return np.where(decision_values(model, matrix) >= 0, 1, -1)


# =============================================================================
# Serialization
# =============================================================================
#
#   svm 1
#   kernel <spec>
#   C <c>
#   bias <b>
#   terms <t>
#   fingerprint <sha256 or ->
#   vectors <n>
#   <label>\t<alpha>\t<col:value ...>      one line per support vector


def dump_svm(model: SvmModel, header: Optional[str] = None) -> str:
    lines = [header] if header else []
    lines += [
        f"svm {FORMAT_VERSION}",
        f"kernel {model.kernel.spec()}",
        f"C {model.C:.17g}",
        f"bias {model.bias:.17g}",
        f"terms {model.n_terms}",
        f"fingerprint {model.vocab_fingerprint or '-'}",
        f"vectors {model.n_support}",
    ]
    sv = model.support_vectors
    for row in range(model.n_support):
        start, end = sv.indptr[row], sv.indptr[row + 1]
        coords = " ".join(
            f"{col}:{value:.17g}" for col, value in zip(sv.indices[start:end], sv.data[start:end])
        )
        lines.append(f"{int(model.sv_labels[row]):+d}\t{model.alphas[row]:.17g}\t{coords}")
    return "\n".join(lines) + "\n"


def load_svm(text: str, source: str = "model") -> SvmModel:
    lines = [
        (number, line) for number, line in enumerate(text.splitlines(), 1)
        if line and not line.startswith("#")
    ]
    keys = ("svm", "kernel", "C", "bias", "terms", "fingerprint", "vectors")
    if len(lines) < len(keys):
        raise ModelFormatError("truncated SVM model", source=source)

    fields = {}
    for key, (number, line) in zip(keys, lines):
        name, _, value = line.partition(" ")
        if name != key or not value:
            raise ModelFormatError(f"expected '{key} ...'", number, source)
        fields[key] = value
    if fields["svm"] != str(FORMAT_VERSION):
        raise ModelFormatError("unsupported SVM format version", lines[0][0], source)

    try:
        kernel = Kernel.parse(fields["kernel"])
        C, bias = float(fields["C"]), float(fields["bias"])
        n_terms, n_vectors = int(fields["terms"]), int(fields["vectors"])
    except (KernelError, ValueError) as e:
        raise ModelFormatError(str(e), source=source) from e

    body = lines[len(keys):]
    if len(body) != n_vectors:
        raise ModelFormatError(f"expected {n_vectors} support vectors, found {len(body)}", source=source)

    labels, alphas, rows, cols, values = [], [], [], [], []
    for row, (number, line) in enumerate(body):
        try:
            label_text, alpha_text, coords = (line.split("\t") + [""])[:3]
            labels.append(int(label_text))
            alphas.append(float(alpha_text))
            for pair in coords.split():
                col_text, value_text = pair.split(":")
                col = int(col_text)
                if not 0 <= col < n_terms:
                    raise ValueError(f"column {col} outside 0..{n_terms - 1}")
                rows.append(row)
                cols.append(col)
                values.append(float(value_text))
        except ValueError as e:
            raise ModelFormatError(f"bad support vector: {e}", number, source) from e

    vectors = sparse.csr_matrix((values, (rows, cols)), shape=(n_vectors, n_terms))
    fingerprint = fields["fingerprint"]
    return SvmModel(
        support_vectors=vectors,
        sv_labels=np.asarray(labels, dtype=np.int64),
        alphas=np.asarray(alphas, dtype=np.float64),
        bias=bias,
        kernel=kernel,
        C=C,
        vocab_fingerprint=None if fingerprint == "-" else fingerprint,
    )
