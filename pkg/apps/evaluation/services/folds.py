"""k-fold index partitions."""
from typing import Optional, Sequence

import numpy as np

from apps.core.services.random_source import make_rng
from apps.evaluation.exceptions import EvaluationError

FOLD_STREAM = 3


def kfold_split(
    n: int, k: int, seed: int, labels: Optional[Sequence[int]] = None
) -> list[np.ndarray]:
    """
    Partition 0..n-1 into k folds whose sizes differ by at most one.

    With `labels`, each class is shuffled on its own and the classes are
    dealt round-robin one after the other, so every fold gets a near-equal
    share of both classes. Each fold is returned sorted.
    """
    if k < 2:
        raise EvaluationError(f"k must be at least 2, got {k}")
    if k > n:
        raise EvaluationError(f"k={k} folds need at least {k} items, got {n}")
    rng = make_rng(seed, FOLD_STREAM)

    if labels is None:
        order = rng.permutation(n)
    else:
        labels = np.asarray(list(labels))
        if labels.shape != (n,):
            raise EvaluationError(f"{labels.size} labels for {n} items")
        if not np.isin(labels, (1, -1)).all():
            raise EvaluationError("labels must be +1 or -1")
        order = np.concatenate([
            rng.permutation(np.flatnonzero(labels == label)) for label in (1, -1)
        ])

    return [np.sort(order[fold::k]) for fold in range(k)]
