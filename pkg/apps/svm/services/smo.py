"""
Sequential minimal optimization for the soft-margin SVM dual.

    minimize   f(a) = 1/2 a'Qa - e'a,   Q_ij = y_i y_j K(x_i, x_j)
    subject to 0 <= a_i <= C,  sum_i a_i y_i = 0

Each iteration picks the maximal violating pair (first-order working
set selection) and solves the two-variable subproblem analytically.
Stops when the KKT gap m(a) - M(a) falls to `tol`. An iteration is idle
when it neither lowers the objective noticeably nor reaches a new smallest
gap; 10 idle iterations per training row, or `max_iter` in total, raise
SvmConvergenceError.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from apps.svm.exceptions import SvmConvergenceError, SvmError
from apps.vectorize.services.matrix import as_csr

from .kernels import Kernel, gram_matrix
from .svm_models import SvmModel

logger = logging.getLogger(__name__)

TAU = 1e-12  # curvature floor for non-positive eta
STALL_FACTOR = 10  # idle iterations allowed per training row
PROGRESS_EPS = 1e-12


def _violating_pair(y: np.ndarray, alpha: np.ndarray, grad: np.ndarray, C: float):
    score = -y * grad
    up = ((y > 0) & (alpha < C)) | ((y < 0) & (alpha > 0))
    low = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < C))
    up_scores = np.where(up, score, -np.inf)
    low_scores = np.where(low, score, np.inf)
    i = int(np.argmax(up_scores))
    j = int(np.argmin(low_scores))
    return i, j, float(up_scores[i]), float(low_scores[j])


def _bias(y: np.ndarray, alpha: np.ndarray, grad: np.ndarray, C: float,
          K: np.ndarray, m: float, M: float) -> float:
    free = (alpha > 0) & (alpha < C)
    if free.any():
        return float(np.mean(-y[free] * grad[free]))

    # No unbounded support vectors: midpoint between the closest
    # positive and negative outputs, kept inside the KKT interval.
    g = K @ (alpha * y)
    positive, negative = y > 0, y < 0
    bias = -0.5 * (g[positive].min() + g[negative].max())
    return float(np.clip(bias, min(m, M), max(m, M)))


def train_svm(
    matrix,
    labels: Sequence[int],
    kernel: Kernel,
    C: float = 10.0,
    tol: float = 1e-3,
    max_iter: int = 100_000,
    vocab_fingerprint: Optional[str] = None,
) -> SvmModel:
    X = as_csr(matrix)
    if vocab_fingerprint is None:
        vocab_fingerprint = getattr(matrix, "vocab_fingerprint", None)
    y = np.asarray(list(labels), dtype=np.float64)
    n = X.shape[0]
    if y.shape != (n,):
        raise SvmError(f"{n} matrix rows but {y.size} labels")
    if not np.isin(y, (1.0, -1.0)).all():
        raise SvmError("labels must be +1 or -1")
    if not ((y > 0).any() and (y < 0).any()):
        raise SvmError("degenerate training labels")
    if not C > 0:
        raise SvmError(f"C must be > 0, got {C}")
    if not tol > 0:
        raise SvmError(f"tol must be > 0, got {tol}")

    K = gram_matrix(kernel, X)
    alpha = np.zeros(n)
    grad = -np.ones(n)
    objective, best_gap, idle = 0.0, np.inf, 0

    iteration = 0
    while True:
        i, j, m, M = _violating_pair(y, alpha, grad, C)
        gap = m - M
        if gap <= tol:
            break
        if idle > STALL_FACTOR * n:
            raise SvmConvergenceError("SMO stalled", gap, iteration)
        if iteration >= max_iter:
            raise SvmConvergenceError("SMO did not converge", gap, iteration)

        eta = K[i, i] + K[j, j] - 2.0 * K[i, j]
        step = gap / (eta if eta > 0 else TAU)
        room_i = C - alpha[i] if y[i] > 0 else alpha[i]
        room_j = alpha[j] if y[j] > 0 else C - alpha[j]
        step = min(step, room_i, room_j)
        decrease = step * gap - 0.5 * step * step * eta
        objective -= decrease
        if decrease > PROGRESS_EPS * max(1.0, abs(objective)) or gap < best_gap:
            idle = 0
        else:
            idle += 1
        best_gap = min(best_gap, gap)

        alpha[i] += y[i] * step
        alpha[j] -= y[j] * step
        if step == room_i:  # land exactly on the box
            alpha[i] = C if y[i] > 0 else 0.0
        if step == room_j:
            alpha[j] = 0.0 if y[j] > 0 else C
        grad += step * y * (K[:, i] - K[:, j])
        iteration += 1

    bias = _bias(y, alpha, grad, C, K, m, M)
    support = np.flatnonzero(alpha > 0)
    logger.info(
        "SMO converged: %d iterations, %d support vectors of %d, kernel %s, C=%g",
        iteration, support.size, n, kernel.spec(), C,
    )
    return SvmModel(
        support_vectors=X[support],
        sv_labels=y[support].astype(np.int64),
        alphas=alpha[support],
        bias=bias,
        kernel=kernel,
        C=float(C),
        vocab_fingerprint=vocab_fingerprint,
        support_indices=support,
        iterations=iteration,
    )
