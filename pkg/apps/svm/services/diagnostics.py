"""
Post-training checks on SVM models: dual objective, primal weights,
margins, hinge slacks and per-point KKT violations.
"""
from typing import Sequence

import numpy as np

from apps.svm.exceptions import KernelError, SvmError
from apps.vectorize.services.matrix import as_csr

from .kernels import KernelKind, gram_matrix
from .svm_models import SvmModel, decision_values


def dual_value(alphas: np.ndarray, labels: Sequence[int], K: np.ndarray) -> float:
    """W(a) = sum a_i - 1/2 sum_ij a_i a_j y_i y_j K_ij."""
    coefficients = np.asarray(alphas, dtype=np.float64) * np.asarray(labels, dtype=np.float64)
    return float(np.sum(alphas) - 0.5 * coefficients @ K @ coefficients)


def dual_objective(model: SvmModel) -> float:
    if model.n_support == 0:
        return 0.0
    K = gram_matrix(model.kernel, model.support_vectors)
    return dual_value(model.alphas, model.sv_labels, K)


def weight_vector(model: SvmModel) -> np.ndarray:
    """Primal w = sum a_i y_i sv_i; only defined for the linear kernel."""
    if model.kernel.kind is not KernelKind.LINEAR:
        raise KernelError(f"weight vector needs a linear kernel, model uses {model.kernel.kind.value}")
    return np.asarray(model.support_vectors.T @ model.coefficients).ravel()


def geometric_margin(model: SvmModel, matrix=None, labels: Sequence[int] = None) -> float:
    """
    1 / ||w|| for the model alone, or min_i y_i f(x_i) / ||w|| over the
    given points. On a separable problem the two agree at convergence.
    """
    norm = float(np.linalg.norm(weight_vector(model)))
    if norm == 0:
        return float("inf")
    if matrix is None:
        return 1.0 / norm
    y = np.asarray(labels, dtype=np.float64)
    return float(np.min(y * decision_values(model, matrix)) / norm)


def hinge_slacks(model: SvmModel, matrix, labels: Sequence[int]) -> np.ndarray:
    y = np.asarray(labels, dtype=np.float64)
    return np.maximum(0.0, 1.0 - y * decision_values(model, matrix))


def training_alphas(model: SvmModel, n_rows: int) -> np.ndarray:
    if model.support_indices is None:
        raise SvmError("model does not know its training rows (loaded from file?)")
    alphas = np.zeros(n_rows)
    alphas[model.support_indices] = model.alphas
    return alphas


def kkt_violations(model: SvmModel, matrix, labels: Sequence[int]) -> np.ndarray:
    """
    Per training point:
        a = 0      ->  max(0, 1 - y f)
        0 < a < C  ->  |y f - 1|
        a = C      ->  max(0, y f - 1)
    """
    X = as_csr(matrix)
    y = np.asarray(labels, dtype=np.float64)
    alphas = training_alphas(model, X.shape[0])
    margin = y * decision_values(model, X)
    at_zero = alphas == 0
    at_bound = alphas == model.C
    return np.where(
        at_zero,
        np.maximum(0.0, 1.0 - margin),
        np.where(at_bound, np.maximum(0.0, margin - 1.0), np.abs(margin - 1.0)),
    )
